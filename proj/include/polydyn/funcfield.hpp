#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydyn/dynamics.hpp"
#include "polydyn/poly.hpp"
#include "polydyn/ratfunc.hpp"

namespace polydyn {

using FFLinear = LinearPoly<RatFunc>;

/// f at t = c.  Absent when some coefficient has a pole at c or the leading
/// coefficient vanishes there (bad reduction).
std::optional<QPoly> specialize(const FFPoly& f, const Rational& c);

enum class Isotriviality {
  WithQtWitness,      // l^-1 o f o l in Q[X] for some l over Q(t)
  OverExtensionOnly,  // isotrivial, but every witness needs a root outside Q(t)
  NotIsotrivial,
};

struct IsotrivialResult {
  Isotriviality kind = Isotriviality::NotIsotrivial;
  std::optional<FFLinear> witness;
  std::optional<QPoly> conjugated;  // l^-1 o f o l, present with a witness
  unsigned long root_degree = 1;    // g: the witness slope is a g-th root
};

IsotrivialResult is_isotrivial(const FFPoly& f);

struct SurveyBounds {
  std::size_t k_max = 6;
  std::size_t orbit_max = default_preperiodic_cap;
};

struct SpecializationReport {
  Rational point;
  bool good_reduction = false;
  std::optional<QPoly> f;
  std::optional<QPoly> g;
  std::optional<Rational> x0;
  std::optional<Rational> y0;
  bool condition1 = false;
  bool condition2 = false;
  std::optional<std::size_t> common_iterate;  // least k <= k_max with f^k = g^k
  bool condition3 = false;
  std::optional<Preperiodicity> verdict;      // for x0 under f; absent if not computable
  std::size_t k_max = 0;
};

std::vector<SpecializationReport> specialization_survey(const FFPoly& f, const FFPoly& g, const RatFunc& x0,
                                                        const RatFunc& y0, const std::vector<Rational>& candidates,
                                                        const SurveyBounds& bounds = {});

struct SilvermanPoint {
  Rational alpha;
  Real height;
  bool probed = false;  // h(alpha) >= cutoff and good reduction
  std::optional<Preperiodicity> verdict;
};

struct SilvermanReport {
  bool applicable = false;
  std::string note;
  std::vector<SilvermanPoint> points;
  std::vector<Rational> counterexamples;  // probed points where x0 is preperiodic
};

/// Non-preperiodicity of x0(alpha) for f_alpha at sample points of height at
/// least the cutoff.  Isotrivial f is routed to a "not applicable" report.
SilvermanReport prop_silverman_probe(const FFPoly& f, const RatFunc& x0, const Real& height_cutoff,
                                     const std::vector<Rational>& sample);

}  // namespace polydyn
