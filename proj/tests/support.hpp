#pragma once

// Shared helpers for the unit suites: literal parsing and seeded generators.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "polydyn/expr.hpp"
#include "polydyn/poly.hpp"
#include "polydyn/rational.hpp"

namespace polydyn::testing {

using QPoly = Poly<Rational>;
using QLinear = LinearPoly<Rational>;

inline QPoly P(std::string_view s) { return parse_poly(s); }
inline FFPoly FF(std::string_view s) { return parse_ffpoly(s); }
inline Rational Q(std::string_view s) { return parse_rational(s); }
inline RatFunc T(std::string_view s) { return parse_ratfunc(s); }
inline QLinear L(long a, long b) { return QLinear(Rational(a), Rational(b)); }

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long num_bound = 9, long den_bound = 5) {
    return Rational(BigInt(integer(-num_bound, num_bound)), BigInt(integer(1, den_bound)));
  }
  Rational nonzero_rational(long num_bound = 9, long den_bound = 5) {
    Rational r = rational(num_bound, den_bound);
    while (r.is_zero()) r = rational(num_bound, den_bound);
    return r;
  }

  /// Random polynomial of exact degree `degree`.
  QPoly poly(std::size_t degree, long num_bound = 5, long den_bound = 3) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < degree; ++i) c.push_back(rational(num_bound, den_bound));
    c.push_back(nonzero_rational(num_bound, den_bound));
    return QPoly(std::move(c));
  }
  /// Random integer-coefficient polynomial of exact degree `degree`.
  QPoly int_poly(std::size_t degree, long bound) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < degree; ++i) c.push_back(Rational(integer(-bound, bound)));
    long lead = 0;
    while (lead == 0) lead = integer(-bound, bound);
    c.push_back(Rational(lead));
    return QPoly(std::move(c));
  }
  QLinear linear(long num_bound = 5, long den_bound = 3) {
    return QLinear(nonzero_rational(num_bound, den_bound), rational(num_bound, den_bound));
  }

  RatFunc ratfunc() {
    std::vector<Rational> n, d;
    const std::size_t dn = static_cast<std::size_t>(integer(0, 2));
    const std::size_t dd = static_cast<std::size_t>(integer(0, 2));
    for (std::size_t i = 0; i <= dn; ++i) n.push_back(rational(4, 3));
    for (std::size_t i = 0; i < dd; ++i) d.push_back(rational(4, 3));
    d.push_back(Rational(1));
    return RatFunc(QPoly(std::move(n)), QPoly(std::move(d)));
  }
  RatFunc nonzero_ratfunc() {
    RatFunc r = ratfunc();
    while (r.is_zero()) r = ratfunc();
    return r;
  }
  FFPoly ffpoly(std::size_t degree) {
    std::vector<RatFunc> c;
    for (std::size_t i = 0; i < degree; ++i) c.push_back(ratfunc());
    c.push_back(nonzero_ratfunc());
    return FFPoly(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace polydyn::testing
