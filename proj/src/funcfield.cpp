#include "polydyn/funcfield.hpp"

#include <numeric>
#include <tuple>
#include <utility>

#include "polydyn/error.hpp"
#include "polydyn/iterate_cache.hpp"
#include "polydyn/ritt.hpp"
#include "polydyn/symmetry.hpp"

namespace polydyn {

namespace {

RatFunc int_pow(const RatFunc& x, long e) {
  return e >= 0 ? field_pow(x, static_cast<unsigned long>(e)) : field_pow(x, static_cast<unsigned long>(-e)).inverse();
}

/// Extended Euclid on |a|, b >= 0: returns (g, u, v) with u a + v b = g.
std::tuple<long, long, long> bezout(long a, long b) {
  long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return {r0, s0, t0};
}

bool all_constant(const FFPoly& p) {
  for (const auto& c : p.coefficients())
    if (!c.is_constant()) return false;
  return true;
}

QPoly to_rational_poly(const FFPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) c.push_back(*x.as_rational());
  return QPoly(std::move(c));
}

}  // namespace

std::optional<QPoly> specialize(const FFPoly& f, const Rational& c) {
  std::vector<Rational> out;
  for (const auto& x : f.coefficients()) {
    auto v = x.evaluate(c);
    if (!v) return std::nullopt;
    out.push_back(std::move(*v));
  }
  if (!f.is_zero() && out.back().is_zero()) return std::nullopt;
  return QPoly(std::move(out));
}

IsotrivialResult is_isotrivial(const FFPoly& f) {
  detail::require_degree_two(f, "is_isotrivial");
  const std::size_t d = f.deg();
  const RatFunc beta = detail::depressing_shift(f);
  const FFLinear shift = FFLinear::shift(beta);
  // D = shift^-1 o f o shift; scaling by lambda sends c_i to c_i lambda^(i-1).
  const FFPoly depressed = compose(shift.inverse(), compose(f, shift));

  std::vector<std::pair<long, RatFunc>> terms;  // (i - 1, c_i) over nonzero c_i
  for (std::size_t i = 0; i <= d; ++i)
    if (!depressed.coeff(i).is_zero()) terms.emplace_back(static_cast<long>(i) - 1, depressed.coeff(i));

  IsotrivialResult out;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    if (terms[a].first == 0 && !terms[a].second.is_constant()) return out;
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      const RatFunc ratio = int_pow(terms[a].second, terms[b].first) / int_pow(terms[b].second, terms[a].first);
      if (!ratio.is_constant()) return out;
    }
  }

  // lambda^g = prod c_i^(-n_i) up to a rational factor, from sum n_i e_i = g.
  long g = 0;
  RatFunc mu(1);
  for (const auto& [e, c] : terms) {
    if (e == 0) continue;
    const long sign = e < 0 ? -1 : 1;
    auto [next, u, v] = bezout(g, e * sign);
    mu = int_pow(mu, u) * int_pow(c, -v * sign);
    g = next;
  }
  out.root_degree = static_cast<unsigned long>(g);
  const RatFunc normalized = mu / RatFunc(mu.numerator().leading());
  const auto roots = FieldTraits<RatFunc>::nth_roots(normalized, out.root_degree);
  if (roots.empty()) {
    out.kind = Isotriviality::OverExtensionOnly;
    return out;
  }
  const FFLinear witness(roots.front(), beta);
  const FFPoly conj = compose(witness.inverse(), compose(f, witness));
  if (!all_constant(conj)) throw DomainError("is_isotrivial: witness does not conjugate into Q[X]");
  out.kind = Isotriviality::WithQtWitness;
  out.witness = witness;
  out.conjugated = to_rational_poly(conj);
  return out;
}

std::vector<SpecializationReport> specialization_survey(const FFPoly& f, const FFPoly& g, const RatFunc& x0,
                                                        const RatFunc& y0, const std::vector<Rational>& candidates,
                                                        const SurveyBounds& bounds) {
  auto& cache = session_iterates<Rational>();
  std::vector<SpecializationReport> out;
  for (const Rational& c : candidates) {
    SpecializationReport rep;
    rep.point = c;
    rep.k_max = bounds.k_max;
    rep.f = specialize(f, c);
    rep.g = specialize(g, c);
    rep.x0 = x0.evaluate(c);
    rep.y0 = y0.evaluate(c);
    rep.good_reduction = rep.f && rep.g;
    rep.condition1 = rep.good_reduction && rep.x0 && rep.y0;
    if (rep.good_reduction) {
      const QPoly& fc = *rep.f;
      const QPoly& gc = *rep.g;
      if (fc.deg() == gc.deg())
        for (std::size_t k = 1; k <= bounds.k_max && !rep.common_iterate; ++k)
          if (cache.get(fc, k) == cache.get(gc, k)) rep.common_iterate = k;
      if (!fc.is_constant() && fc.deg() >= 2 && fc.deg() == gc.deg()) {
        const auto n = minimal_common_iterate(fc, gc);
        if (n.has_value() != rep.common_iterate.has_value() || (n && *n != *rep.common_iterate))
          throw DomainError("specialization_survey: common iterate disagrees with classification");
      }
      rep.condition2 = !rep.common_iterate;
      if (rep.x0 && !fc.is_constant() && fc.deg() >= 2) {
        rep.verdict = is_preperiodic(fc, *rep.x0, bounds.orbit_max).verdict;
        rep.condition3 = *rep.verdict == Preperiodicity::NotPreperiodic;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

SilvermanReport prop_silverman_probe(const FFPoly& f, const RatFunc& x0, const Real& height_cutoff,
                                     const std::vector<Rational>& sample) {
  SilvermanReport rep;
  if (is_isotrivial(f).kind != Isotriviality::NotIsotrivial) {
    rep.note = "isotrivial, proposition not applicable: orbits of isotrivial maps can have height 0";
    return rep;
  }
  rep.applicable = true;
  for (const Rational& a : sample) {
    SilvermanPoint p{a, weil_height(a)};
    const auto fa = specialize(f, a);
    const auto xa = x0.evaluate(a);
    if (p.height >= height_cutoff && fa && xa) {
      p.probed = true;
      p.verdict = is_preperiodic(*fa, *xa).verdict;
      if (*p.verdict == Preperiodicity::Preperiodic) rep.counterexamples.push_back(a);
    }
    rep.points.push_back(std::move(p));
  }
  rep.note = rep.counterexamples.empty() ? "no counterexamples among probed points"
                                         : "counterexamples found: the cutoff is below the proposition's constant";
  return rep;
}

}  // namespace polydyn
