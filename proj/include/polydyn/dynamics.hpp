#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "polydyn/poly.hpp"
#include "polydyn/rational.hpp"

namespace polydyn {

using QPoly = Poly<Rational>;
using QLinear = LinearPoly<Rational>;

/// Working precision for heights.  Results are printed to fewer digits.
inline constexpr unsigned height_working_digits = 60;
inline constexpr unsigned height_output_digits = 50;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<height_working_digits>>;

Real log_of(const BigInt& n);
std::string to_decimal(const Real& x, unsigned digits = height_output_digits);

/// x0, f(x0), f(f(x0)), ...; points are computed on demand and kept.
class Orbit {
public:
  Orbit(QPoly map, Rational start);

  const QPoly& map() const { return map_; }
  const Rational& start() const { return points_.front(); }
  /// f^k(x0).
  const Rational& at(std::size_t k);
  /// x0 .. f^k(x0).
  const std::vector<Rational>& prefix(std::size_t k);

private:
  QPoly map_;
  std::vector<Rational> points_;
};

/// h(p/q) = log max(|p|, q).
Real weil_height(const Rational& x);

/// c with |h(l(x)) - h(x)| <= c for all rational x: h(a) + h(b) + h(1/a) + 2 log 2.
Real linear_height_bound(const QLinear& l);

/// Bounds for f of degree d >= 2, written as (sum A_i X^i)/M with integer A_i.
///   c0 bounds |h(f(y)) - d h(y)| for every rational y,
///   c = c0/(d-1) bounds |h(y) - canonical height(y)|,
/// and c is also an escape threshold: h(y) > c implies h(f(y)) > h(y).
struct HeightConstants {
  Real c0;
  Real c;
};
HeightConstants height_constants(const QPoly& f);

struct HeightEstimate {
  Real value;
  Real error_bound;
  std::size_t iterations_used = 0;
};

/// h(f^k(x))/d^k, within c/d^k of the canonical height.
HeightEstimate canonical_height(const QPoly& f, const Rational& x, std::size_t k);

enum class Preperiodicity { Preperiodic, NotPreperiodic, Undecided };

struct PreperiodicResult {
  Preperiodicity verdict = Preperiodicity::Undecided;
  std::size_t steps = 0;                 // orbit points examined
  std::optional<std::size_t> preperiod;  // first index of the cycle
  std::optional<std::size_t> period;
};

inline constexpr std::size_t default_preperiodic_cap = 10000;

/// Iterates until a value repeats, or the height passes the escape
/// threshold, or `max_iterations` points have been examined.
PreperiodicResult is_preperiodic(const QPoly& f, const Rational& x,
                                 std::size_t max_iterations = default_preperiodic_cap);

/// All (m, n) with 0 <= m <= M, 0 <= n <= N and f^m(x0) = g^n(y0), ascending.
std::vector<std::pair<std::size_t, std::size_t>> orbit_intersection(const QPoly& f, const QPoly& g,
                                                                    const Rational& x0, const Rational& y0,
                                                                    std::size_t m_max, std::size_t n_max);

/// {1 <= n <= N : f^n(x0) = g^n(y0)}.
std::vector<std::size_t> diagonal_hits(const QPoly& f, const QPoly& g, const Rational& x0,
                                       const Rational& y0, std::size_t n_max);

/// Least 1 <= k <= k_max with g^k o l = l o f^k for l = alpha X + beta.
std::optional<std::size_t> line_periodicity(const QPoly& f, const QPoly& g, const Rational& alpha,
                                            const Rational& beta, std::size_t k_max);

struct HeightGrowthRow {
  std::size_t k = 0;
  Real h_f;
  Real h_g;
};

struct HeightGrowthReport {
  std::vector<HeightGrowthRow> rows;  // k = 0 .. k_max
  std::optional<std::size_t> separated_at;
  char dominant = 0;  // 'f' or 'g' when separated
};

/// Heights of f^k(x0) and g^k(y0) for k = 0..k_max.  A separation is
/// reported when deg f != deg g and one side is strictly larger at every k
/// from some k* through k_max; k* is the least such k.
HeightGrowthReport height_growth_report(const QPoly& f, const QPoly& g, const Rational& x0,
                                        const Rational& y0, std::size_t k_max);

struct LinearCaseReport {
  std::optional<Rational> x_hat;  // x0 + beta/(alpha - 1), alpha != 1
  std::optional<Rational> y_hat;  // x0 + delta/(gamma - 1), gamma != 1
  bool hats_equal = false;
  std::vector<std::size_t> hits;  // 1 <= n <= N with f^n(x0) = g^n(x0)
  int case_number = 1;            // 1: neither slope is 1; 2: some slope is 1
  bool case2_divergent = false;   // exactly one slope is 1 and the other exceeds 1 in size
};

LinearCaseReport linear_case_analysis(const QLinear& f, const QLinear& g, const Rational& x0, std::size_t n_max);

}  // namespace polydyn
