#include "polydyn/rational.hpp"

#include <ostream>

#include "polydyn/error.hpp"

namespace polydyn {

namespace {

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<BigInt> exact_integer_root(const BigInt& value, unsigned long n) {
  BigInt root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) == 0) return std::nullopt;
  return root;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
  Rational r;
  r.q_ = q;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return from_mpq(1 / q_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r;
  r.q_ = mpq_class(num, den);  // already reduced: gcd(p^e, q^e) = 1
  return r;
}

std::optional<Rational> Rational::exact_root(unsigned long n) const {
  if (n == 0) throw DomainError("zeroth root");
  if (n == 1) return *this;
  if (sign() < 0 && n % 2 == 0) return std::nullopt;
  auto num = exact_integer_root(q_.get_num(), n);
  if (!num) return std::nullopt;
  auto den = exact_integer_root(q_.get_den(), n);
  if (!den) return std::nullopt;
  Rational r;
  r.q_ = mpq_class(*num, *den);
  return r;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::size_t Rational::hash() const {
  return hash_mpz(q_.get_num()) * 31 + hash_mpz(q_.get_den());
}

namespace detail {
namespace {
BigInt common_denominator(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  return l;
}

std::vector<BigInt> scaled_numerators(const std::vector<Rational>& v, const BigInt& l) {
  std::vector<BigInt> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), v[i].raw().get_den_mpz_t());
    out[i] *= v[i].raw().get_num();
  }
  return out;
}
}  // namespace

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() * b.size() <= 64) {
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  const BigInt la = common_denominator(a), lb = common_denominator(b);
  const auto ia = scaled_numerators(a, la), ib = scaled_numerators(b, lb);
  std::vector<BigInt> acc(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  const BigInt den = la * lb;
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& x : acc) {
    mpq_class q(x, den);
    q.canonicalize();
    out.push_back(Rational::from_mpq(q));
  }
  return out;
}
}  // namespace detail

Rational rat_normalize(const BigInt& n, const BigInt& d) { return Rational(n, d); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace polydyn
