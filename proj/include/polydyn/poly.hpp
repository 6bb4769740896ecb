#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "polydyn/error.hpp"
#include "polydyn/field.hpp"

namespace polydyn {

namespace detail {
template <class K>
std::vector<K> convolve(const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> r(a.size() + b.size() - 1, FieldTraits<K>::zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == FieldTraits<K>::zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}
}  // namespace detail

/// Polynomial degree.  The zero polynomial has degree -infinity, which
/// compares below every finite degree and cannot be converted to an integer.
class Degree {
public:
  static Degree neg_infinity() { return Degree(); }
  explicit Degree(std::size_t value) : value_(value) {}

  bool is_neg_infinity() const { return !value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw DomainError("degree of the zero polynomial is -infinity");
    return *value_;
  }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }

private:
  Degree() = default;
  std::optional<std::size_t> value_;
};

/// Dense univariate polynomial; coefficient i multiplies X^i.  The stored
/// coefficient vector never ends in a zero, so the zero polynomial is empty.
template <class K>
class Poly {
public:
  using Field = FieldTraits<K>;
  using value_type = K;

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const K& c) { return Poly(std::vector<K>{c}); }
  static Poly monomial(const K& c, std::size_t exponent) {
    std::vector<K> v(exponent + 1, Field::zero());
    v[exponent] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(Field::one(), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(c_.size() - 1); }
  /// Degree of a nonzero polynomial; throws on the zero polynomial.
  std::size_t deg() const { return degree().value(); }

  const K& coeff(std::size_t i) const {
    static const K zero = Field::zero();
    return i < c_.size() ? c_[i] : zero;
  }
  const std::vector<K>& coefficients() const { return c_; }
  const K& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Exponents carrying a nonzero coefficient, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == Field::zero())) s.push_back(i);
    return s;
  }

  K operator()(const K& x) const {
    K acc = Field::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return Poly(detail::convolve(a.c_, b.c_));
  }
  friend Poly operator*(const K& s, const Poly& p) { return p.scaled(s); }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const K& s) const {
    if (s == Field::zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
  }
  Poly monic() const { return scaled(Field::one() / leading()); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::size_t hash() const {
    std::size_t h = c_.size();
    for (const auto& c : c_) h ^= std::hash<K>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == Field::zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
struct PolyHash {
  std::size_t operator()(const Poly<K>& p) const { return p.hash(); }
};

template <class K>
Poly<K> power(const Poly<K>& base, std::size_t exponent) {
  Poly<K> result = Poly<K>::constant(FieldTraits<K>::one());
  Poly<K> b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

/// outer(inner), by Horner's scheme in the polynomial ring.
template <class K>
Poly<K> compose(const Poly<K>& outer, const Poly<K>& inner) {
  const auto& c = outer.coefficients();
  Poly<K> acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly<K>::constant(*it);
  return acc;
}

/// Quotient and remainder of a by b (b nonzero).
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  const std::size_t db = b.deg();
  const std::size_t dq = a.deg() - db;
  std::vector<K> r = a.coefficients();
  std::vector<K> q(dq + 1, FieldTraits<K>::zero());
  const K lead_inv = FieldTraits<K>::one() / b.leading();
  for (std::size_t s = dq + 1; s-- > 0;) {
    const K factor = r[s + db] * lead_inv;
    r[s + db] = FieldTraits<K>::zero();
    if (factor == FieldTraits<K>::zero()) continue;
    for (std::size_t j = 0; j < db; ++j) r[s + j] = r[s + j] - factor * b.coeff(j);
    q[s] = factor;
  }
  r.resize(db);
  return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

/// Monic gcd (zero when both inputs are zero), Euclid's algorithm with the
/// remainder made monic after each step.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

/// Monic R with R^n = P for monic P, if one exists.  The coefficients of R
/// are read off from the top n*k-1 ... n*k-k coefficients of P, then R^n is
/// compared against P.
template <class K>
std::optional<Poly<K>> poly_nth_root(const Poly<K>& p, std::size_t n) {
  using F = FieldTraits<K>;
  if (n == 0) throw DomainError("zeroth root");
  if (p.is_zero() || !(p.leading() == F::one())) throw DomainError("poly_nth_root needs a monic polynomial");
  if (p.deg() % n != 0) return std::nullopt;
  const std::size_t k = p.deg() / n;
  std::vector<K> r(k + 1, F::zero());
  r[k] = F::one();
  const K n_field = F::from_integer(static_cast<long>(n));
  for (std::size_t j = 1; j <= k; ++j) {
    const Poly<K> partial(r);
    const K known = power(partial, n).coeff(n * k - j);
    r[k - j] = (p.coeff(n * k - j) - known) / n_field;
  }
  Poly<K> root(std::move(r));
  if (power(root, n) == p) return root;
  return std::nullopt;
}

/// n-fold self-composition; iterate(f, 0) = X.
template <class K>
Poly<K> iterate(const Poly<K>& f, std::size_t n) {
  Poly<K> result = Poly<K>::x();
  for (std::size_t i = 0; i < n; ++i) result = compose(f, result);
  return result;
}

/// Degree-one polynomial aX + b with a != 0.
template <class K>
class LinearPoly {
public:
  using Field = FieldTraits<K>;

  LinearPoly(K slope, K intercept) : a_(std::move(slope)), b_(std::move(intercept)) {
    if (a_ == Field::zero()) throw DomainError("linear polynomial needs a nonzero slope");
  }
  static LinearPoly identity() { return LinearPoly(Field::one(), Field::zero()); }
  static LinearPoly scaling(const K& a) { return LinearPoly(a, Field::zero()); }
  static LinearPoly shift(const K& b) { return LinearPoly(Field::one(), b); }
  static std::optional<LinearPoly> from_poly(const Poly<K>& p) {
    if (p.degree() != Degree(1)) return std::nullopt;
    return LinearPoly(p.coeff(1), p.coeff(0));
  }

  const K& slope() const { return a_; }
  const K& intercept() const { return b_; }
  bool is_identity() const { return a_ == Field::one() && b_ == Field::zero(); }

  Poly<K> as_poly() const { return Poly<K>(std::vector<K>{b_, a_}); }
  K operator()(const K& x) const { return a_ * x + b_; }
  LinearPoly inverse() const {
    K inv = Field::one() / a_;
    return LinearPoly(inv, -(b_ * inv));
  }

  friend bool operator==(const LinearPoly& l, const LinearPoly& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

private:
  K a_;
  K b_;
};

template <class K>
LinearPoly<K> compose(const LinearPoly<K>& outer, const LinearPoly<K>& inner) {
  return LinearPoly<K>(outer.slope() * inner.slope(),
                       outer.slope() * inner.intercept() + outer.intercept());
}
template <class K>
Poly<K> compose(const Poly<K>& outer, const LinearPoly<K>& inner) {
  return compose(outer, inner.as_poly());
}
template <class K>
Poly<K> compose(const LinearPoly<K>& outer, const Poly<K>& inner) {
  return inner.scaled(outer.slope()) + Poly<K>::constant(outer.intercept());
}

/// l^{-1} o f o l.
template <class K>
Poly<K> conjugate(const Poly<K>& f, const LinearPoly<K>& l) {
  return compose(l.inverse(), compose(f, l));
}

namespace detail {
template <class K>
void require_equal_positive_degree(const Poly<K>& p, const Poly<K>& q) {
  if (p.is_constant() || q.is_constant() || p.deg() != q.deg())
    throw DomainError("degree mismatch: both polynomials need the same degree >= 1");
}
}  // namespace detail

/// Every linear l with Q o l = P.  The slope is an exact deg(P)-th root of
/// lc(P)/lc(Q), the intercept comes from the X^{d-1} coefficient, and each
/// candidate is confirmed by recomposition.  Positive slopes come first.
template <class K>
std::vector<LinearPoly<K>> solve_linear_factor_right_all(const Poly<K>& p, const Poly<K>& q) {
  using F = FieldTraits<K>;
  detail::require_equal_positive_degree(p, q);
  const std::size_t d = p.deg();
  std::vector<LinearPoly<K>> out;
  for (const K& a : F::nth_roots(p.leading() / q.leading(), d)) {
    const K a_pow = field_pow(a, d - 1);
    const K b = (p.coeff(d - 1) / a_pow - q.coeff(d - 1)) / (F::from_integer(static_cast<long>(d)) * q.leading());
    LinearPoly<K> l(a, b);
    if (compose(q, l) == p) out.push_back(l);
  }
  return out;
}

/// The first l (in solve_linear_factor_right_all order) with Q o l = P.
template <class K>
std::optional<LinearPoly<K>> solve_linear_factor_right(const Poly<K>& p, const Poly<K>& q) {
  auto all = solve_linear_factor_right_all(p, q);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// The unique l with l o Q = P, if any.
template <class K>
std::optional<LinearPoly<K>> solve_linear_factor_left(const Poly<K>& p, const Poly<K>& q) {
  detail::require_equal_positive_degree(p, q);
  const K a = p.leading() / q.leading();
  LinearPoly<K> l(a, p.coeff(0) - a * q.coeff(0));
  if (compose(l, q) == p) return l;
  return std::nullopt;
}

}  // namespace polydyn

template <class K>
struct std::hash<polydyn::Poly<K>> {
  std::size_t operator()(const polydyn::Poly<K>& p) const { return p.hash(); }
};
