#include "polydyn/dynamics.hpp"

#include <map>
#include <unordered_map>

#include <boost/multiprecision/gmp.hpp>

#include "polydyn/error.hpp"
#include "polydyn/iterate_cache.hpp"

namespace polydyn {

namespace {

void require_degree_two(const QPoly& f, const char* what) {
  if (f.is_constant() || f.deg() < 2) throw DomainError(std::string(what) + " requires deg(f) >= 2");
}

BigInt height_integer(const Rational& x) {
  BigInt n = abs(x.numerator());
  const BigInt d = x.denominator();
  return n > d ? n : d;
}

/// Smallest integer T with H >= T implying log H > c, with a safety margin
/// well above the working precision.
BigInt escape_integer(const Real& c) {
  using boost::multiprecision::exp;
  using boost::multiprecision::floor;
  const Real margin = Real(1) + Real("1e-40");
  const Real bound = floor(exp(c) * margin) + 1;
  const auto z = bound.convert_to<boost::multiprecision::mpz_int>();
  return BigInt(z.backend().data());
}

Real power_of(std::size_t d, std::size_t k) {
  return boost::multiprecision::pow(Real(static_cast<unsigned long>(d)), static_cast<unsigned long>(k));
}

}  // namespace

Real log_of(const BigInt& n) {
  if (n <= 0) throw DomainError("log of a nonpositive integer");
  return Real(log(Real(boost::multiprecision::mpz_int(n.get_mpz_t()))));
}

std::string to_decimal(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fixed);
}

Orbit::Orbit(QPoly map, Rational start) : map_(std::move(map)), points_{std::move(start)} {}

const Rational& Orbit::at(std::size_t k) {
  while (points_.size() <= k) points_.push_back(map_(points_.back()));
  return points_[k];
}

const std::vector<Rational>& Orbit::prefix(std::size_t k) {
  at(k);
  return points_;
}

Real weil_height(const Rational& x) { return log_of(height_integer(x)); }

Real linear_height_bound(const QLinear& l) {
  return weil_height(l.slope()) + weil_height(l.intercept()) + weil_height(l.slope().inverse()) +
         2 * log_of(BigInt(2));
}

HeightConstants height_constants(const QPoly& f) {
  require_degree_two(f, "height_constants");
  const std::size_t d = f.deg();
  BigInt m = 1;
  for (const auto& a : f.coefficients()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), a.raw().get_den_mpz_t());
  BigInt k = m, lower_sum = 0;
  BigInt lead;
  for (std::size_t i = 0; i <= d; ++i) {
    const BigInt a = abs(f.coeff(i).numerator() * (m / f.coeff(i).denominator()));
    if (a > k) k = a;
    if (i < d) lower_sum += a;
    else lead = a;
  }
  Real r = 2 * Real(boost::multiprecision::mpz_int(lower_sum.get_mpz_t())) /
           Real(boost::multiprecision::mpz_int(lead.get_mpz_t()));
  if (r < 1) r = 1;
  const Real dd(static_cast<unsigned long>(d));
  const Real upper = log_of(BigInt(static_cast<unsigned long>(d + 1))) + log_of(k);
  const Real spread = dd * Real(log(r));
  const Real lower = (spread > log_of(BigInt(2)) ? spread : log_of(BigInt(2))) + log_of(m) + dd * log_of(lead);
  HeightConstants out;
  out.c0 = upper > lower ? upper : lower;
  out.c = out.c0 / (dd - 1);
  return out;
}

HeightEstimate canonical_height(const QPoly& f, const Rational& x, std::size_t k) {
  require_degree_two(f, "canonical_height");
  Rational y = x;
  for (std::size_t i = 0; i < k; ++i) y = f(y);
  const Real scale = power_of(f.deg(), k);
  HeightEstimate out;
  out.value = weil_height(y) / scale;
  out.error_bound = height_constants(f).c / scale;
  out.iterations_used = k;
  return out;
}

PreperiodicResult is_preperiodic(const QPoly& f, const Rational& x, std::size_t max_iterations) {
  require_degree_two(f, "is_preperiodic");
  const BigInt escape = escape_integer(height_constants(f).c);
  std::unordered_map<Rational, std::size_t> seen;
  PreperiodicResult out;
  Rational y = x;
  for (std::size_t i = 0; i < max_iterations; ++i) {
    out.steps = i + 1;
    if (auto it = seen.find(y); it != seen.end()) {
      out.verdict = Preperiodicity::Preperiodic;
      out.preperiod = it->second;
      out.period = i - it->second;
      out.steps = i;
      return out;
    }
    if (height_integer(y) >= escape) {
      out.verdict = Preperiodicity::NotPreperiodic;
      return out;
    }
    seen.emplace(y, i);
    y = f(y);
  }
  out.verdict = Preperiodicity::Undecided;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> orbit_intersection(const QPoly& f, const QPoly& g,
                                                                    const Rational& x0, const Rational& y0,
                                                                    std::size_t m_max, std::size_t n_max) {
  Orbit of(f, x0), og(g, y0);
  std::map<Rational, std::vector<std::size_t>> by_value;
  const auto& fs = of.prefix(m_max);
  for (std::size_t m = 0; m <= m_max; ++m) by_value[fs[m]].push_back(m);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& gs = og.prefix(n_max);
  for (std::size_t n = 0; n <= n_max; ++n)
    if (auto it = by_value.find(gs[n]); it != by_value.end())
      for (std::size_t m : it->second) out.emplace_back(m, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> diagonal_hits(const QPoly& f, const QPoly& g, const Rational& x0,
                                       const Rational& y0, std::size_t n_max) {
  std::vector<std::size_t> out;
  Rational x = x0, y = y0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    x = f(x);
    y = g(y);
    if (x == y) out.push_back(n);
  }
  return out;
}

std::optional<std::size_t> line_periodicity(const QPoly& f, const QPoly& g, const Rational& alpha,
                                            const Rational& beta, std::size_t k_max) {
  if (alpha.is_zero()) throw DomainError("line_periodicity requires alpha != 0");
  if (f.is_constant() || g.is_constant()) throw DomainError("line_periodicity requires deg(f), deg(g) >= 1");
  const QLinear l(alpha, beta);
  auto& cache = session_iterates<Rational>();
  for (std::size_t k = 1; k <= k_max; ++k)
    if (compose(cache.get(g, k), l) == compose(l, cache.get(f, k))) return k;
  return std::nullopt;
}

HeightGrowthReport height_growth_report(const QPoly& f, const QPoly& g, const Rational& x0,
                                        const Rational& y0, std::size_t k_max) {
  if (f.is_constant() || g.is_constant()) throw DomainError("height_growth_report requires f, g nonconstant");
  Orbit of(f, x0), og(g, y0);
  HeightGrowthReport out;
  std::vector<int> sign;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const BigInt hf = height_integer(of.at(k)), hg = height_integer(og.at(k));
    out.rows.push_back({k, log_of(hf), log_of(hg)});
    sign.push_back(hf > hg ? 1 : hf < hg ? -1 : 0);
  }
  if (f.deg() != g.deg() && sign.back() != 0) {
    std::size_t k = k_max;
    while (k > 0 && sign[k - 1] == sign.back()) --k;
    out.separated_at = k;
    out.dominant = sign.back() > 0 ? 'f' : 'g';
  }
  return out;
}

LinearCaseReport linear_case_analysis(const QLinear& f, const QLinear& g, const Rational& x0, std::size_t n_max) {
  const Rational one(1);
  LinearCaseReport out;
  if (f.slope() != one) out.x_hat = x0 + f.intercept() / (f.slope() - one);
  if (g.slope() != one) out.y_hat = x0 + g.intercept() / (g.slope() - one);
  out.hats_equal = out.x_hat && out.y_hat && *out.x_hat == *out.y_hat;
  Rational x = x0, y = x0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    x = f(x);
    y = g(y);
    if (x == y) out.hits.push_back(n);
  }
  const bool f_unit = f.slope() == one, g_unit = g.slope() == one;
  out.case_number = f_unit || g_unit ? 2 : 1;
  out.case2_divergent = (f_unit && !g_unit && g.slope().abs() > one) || (g_unit && !f_unit && f.slope().abs() > one);
  return out;
}

}  // namespace polydyn
