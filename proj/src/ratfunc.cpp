#include "polydyn/ratfunc.hpp"

#include "polydyn/expr.hpp"

namespace polydyn {

RatFunc::RatFunc(TPoly num, TPoly den) {
  if (den.is_zero()) throw DomainError("division by zero");
  if (num.is_zero()) {
    den_ = TPoly::constant(Rational(1));
    return;
  }
  if (num.is_constant() || den.is_constant()) {
    *this = RatFunc(std::move(num), std::move(den), Reduced{});
    return;
  }
  const TPoly g = poly_gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rational lead = den.leading();
  num_ = num.scaled(lead.inverse());
  den_ = den.scaled(lead.inverse());
}

RatFunc::RatFunc(TPoly num, TPoly den, Reduced) {
  if (num.is_zero()) {
    den_ = TPoly::constant(Rational(1));
    return;
  }
  if (den.leading().is_one()) {
    num_ = std::move(num);
    den_ = std::move(den);
    return;
  }
  const Rational inv = den.leading().inverse();
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

std::optional<Rational> RatFunc::as_rational() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0) / den_.coeff(0);
}

std::optional<Rational> RatFunc::evaluate(const Rational& c) const {
  const Rational d = den_(c);
  if (d.is_zero()) return std::nullopt;
  return num_(c) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// Henrici's reductions: only gcds of factors that can actually share roots.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  const RatFunc::TPoly d = poly_gcd(a.den_, b.den_);
  if (d.is_constant())
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
  const RatFunc::TPoly ar = divmod(a.den_, d).first, br = divmod(b.den_, d).first;
  const RatFunc::TPoly t = a.num_ * br + b.num_ * ar;
  if (t.is_zero()) return RatFunc();
  const RatFunc::TPoly g = poly_gcd(t, d);
  return RatFunc(divmod(t, g).first, divmod(a.den_ * br, g).first, RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  const RatFunc::TPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
  auto cut = [](const RatFunc::TPoly& p, const RatFunc::TPoly& g) { return g.is_constant() ? p : divmod(p, g).first; };
  return RatFunc(cut(a.num_, g1) * cut(b.num_, g2), cut(a.den_, g2) * cut(b.den_, g1), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return RatFunc(den_, num_, Reduced{});
}

std::string RatFunc::to_string() const { return format_ratfunc(*this); }

std::vector<RatFunc> FieldTraits<RatFunc>::nth_roots(const RatFunc& x, unsigned long n) {
  if (x.is_zero()) return {RatFunc()};
  const Rational kappa = x.numerator().leading();
  const auto num_root = poly_nth_root(x.numerator().monic(), n);
  if (!num_root) return {};
  const auto den_root = poly_nth_root(x.denominator(), n);
  if (!den_root) return {};
  std::vector<RatFunc> out;
  for (const Rational& c : FieldTraits<Rational>::nth_roots(kappa, n))
    out.emplace_back(num_root->scaled(c), *den_root);
  return out;
}

}  // namespace polydyn
