#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polydyn {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : q_(value) {}
  /// Throws DomainError("division by zero") when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  static Rational from_mpq(const mpq_class& q);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_mpq(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return from_mpq(::abs(q_)); }
  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  /// Exact n-th root if one exists in Q.  For even n the nonnegative root is returned.
  std::optional<Rational> exact_root(unsigned long n) const;

  /// "p" or "p/q".
  std::string to_string() const;
  std::size_t hash() const;

private:
  mpq_class q_;
};

/// Reduced representative of n/d; throws DomainError("division by zero") when d == 0.
namespace detail {
/// Product of two nonempty coefficient vectors over Q, computed on
/// integer numerators after clearing denominators.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b);
}  // namespace detail

Rational rat_normalize(const BigInt& n, const BigInt& d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polydyn

template <>
struct std::hash<polydyn::Rational> {
  std::size_t operator()(const polydyn::Rational& r) const noexcept { return r.hash(); }
};
