#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydyn/error.hpp"
#include "polydyn/rational.hpp"

namespace polydyn {

/// Coefficient-field interface.  Specializations provide:
///   zero(), one(), roots_of_unity(s), count_roots_of_unity(),
///   is_rational_constant(x), as_rational(x), nth_roots(x, n), to_string(x).
/// Arithmetic (+ - * / unary -, ==) comes from the element type itself.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }

  /// {1} for s odd or s == 0; {1, -1} for s even.
  static std::vector<Rational> roots_of_unity(unsigned long s) {
    if (s != 0 && s % 2 == 0) return {Rational(1), Rational(-1)};
    return {Rational(1)};
  }
  static unsigned long count_roots_of_unity() { return 2; }
  static bool is_rational_constant(const Rational&) { return true; }
  static std::optional<Rational> as_rational(const Rational& x) { return x; }

  /// All y in Q with y^n = x, positive root first.
  static std::vector<Rational> nth_roots(const Rational& x, unsigned long n) {
    auto r = x.exact_root(n);
    if (!r) return {};
    if (r->is_zero() || n % 2 == 1) return {*r};
    return {*r, -*r};
  }
  static Rational from_integer(long n) { return Rational(n); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <class K>
K field_pow(const K& base, unsigned long exponent) {
  K result = FieldTraits<K>::one();
  K b = base;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

/// Least m <= bound with gamma^m = 1, or nullopt.
template <class K>
std::optional<unsigned long> multiplicative_order(const K& gamma, unsigned long bound) {
  if (gamma == FieldTraits<K>::zero())
    throw DomainError("multiplicative order of zero is undefined");
  K power = gamma;
  for (unsigned long m = 1; m <= bound; ++m) {
    if (power == FieldTraits<K>::one()) return m;
    power = power * gamma;
  }
  return std::nullopt;
}

inline std::vector<Rational> roots_of_unity_Q(unsigned long s) {
  return FieldTraits<Rational>::roots_of_unity(s);
}

}  // namespace polydyn
