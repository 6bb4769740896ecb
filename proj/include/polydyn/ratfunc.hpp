#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polydyn/field.hpp"
#include "polydyn/poly.hpp"
#include "polydyn/rational.hpp"

namespace polydyn {

/// Element of Q(t): numerator/denominator in Q[t], denominator monic and
/// coprime to the numerator.  Zero is 0/1.
class RatFunc {
public:
  using TPoly = Poly<Rational>;

  RatFunc() : den_(TPoly::constant(Rational(1))) {}
  RatFunc(const Rational& c) : num_(TPoly::constant(c)), den_(TPoly::constant(Rational(1))) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT
  RatFunc(int c) : RatFunc(Rational(c)) {}   // NOLINT
  explicit RatFunc(TPoly num) : RatFunc(std::move(num), TPoly::constant(Rational(1))) {}
  /// Throws DomainError on a zero denominator.
  RatFunc(TPoly num, TPoly den);

  /// The parameter t itself.
  static RatFunc t() { return RatFunc(TPoly::x()); }

  const TPoly& numerator() const { return num_; }
  const TPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Q.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> as_rational() const;

  /// Value at t = c; nullopt at a pole.
  std::optional<Rational> evaluate(const Rational& c) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  std::string to_string() const;
  std::size_t hash() const { return num_.hash() * 1000003U ^ den_.hash(); }

private:
  struct Reduced {};
  /// num/den already coprime; only the denominator is made monic.
  RatFunc(TPoly num, TPoly den, Reduced);

  TPoly num_;
  TPoly den_;
};

template <>
struct FieldTraits<RatFunc> {
  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(1); }
  /// The roots of unity of Q(t) are the constants +-1.
  static std::vector<RatFunc> roots_of_unity(unsigned long s) {
    if (s != 0 && s % 2 == 0) return {RatFunc(1), RatFunc(-1)};
    return {RatFunc(1)};
  }
  static unsigned long count_roots_of_unity() { return 2; }
  static bool is_rational_constant(const RatFunc& x) { return x.is_constant(); }
  static std::optional<Rational> as_rational(const RatFunc& x) { return x.as_rational(); }
  static std::vector<RatFunc> nth_roots(const RatFunc& x, unsigned long n);
  static RatFunc from_integer(long n) { return RatFunc(n); }
  static std::string to_string(const RatFunc& x) { return x.to_string(); }
};

using FFPoly = Poly<RatFunc>;

}  // namespace polydyn

template <>
struct std::hash<polydyn::RatFunc> {
  std::size_t operator()(const polydyn::RatFunc& r) const noexcept { return r.hash(); }
};
