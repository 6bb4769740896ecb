#include "polydyn/ritt.hpp"

#include <numeric>

namespace polydyn {

std::pair<Poly<Rational>, Poly<Rational>> standard_pair(const StandardPairSpec& spec) {
  using QP = Poly<Rational>;
  switch (spec.kind) {
    case 1:
      return {QP::x(), QP::x()};
    case 2: {
      const QP sq = QP::monomial(Rational(1), 2);
      return {sq, compose(spec.c, sq)};
    }
    case 3:
      if (spec.alpha.is_zero() || spec.beta.is_zero())
        throw DomainError("standard pair kind 3 requires alpha, beta != 0");
      return {dickson(2, spec.alpha).scaled(spec.alpha.inverse()),
              dickson(2, spec.beta).scaled(spec.beta.inverse())};
    case 4: {
      Rational cosine;
      switch (spec.n) {
        case 1: cosine = Rational(-1); break;
        case 2: cosine = Rational(0); break;
        case 3: cosine = Rational(1, 2); break;
        default:
          throw DomainError("standard pair kind 4 with n = " + std::to_string(spec.n) +
                            " requires extension field");
      }
      const QP dn = dickson(spec.n, spec.alpha);
      if (cosine.is_zero()) return {dn, -QP::constant(dn(Rational(0)))};
      return {dn, -compose(dn, LinearPoly<Rational>::scaling(cosine))};
    }
    default:
      throw DomainError("standard pair kind must be 1, 2, 3 or 4");
  }
}

namespace {
unsigned long order_mod(unsigned long d, unsigned long modulus) {
  unsigned long x = d % modulus, k = 1;
  while (x != 1 % modulus) {
    x = static_cast<unsigned long>((static_cast<unsigned __int128>(x) * d) % modulus);
    ++k;
  }
  return k;
}
}  // namespace

unsigned long iterate_exponent(unsigned long m, unsigned long d) {
  if (m == 0) throw DomainError("iterate_exponent requires m >= 1");
  if (d < 2) throw DomainError("iterate_exponent requires d >= 2");
  if (std::gcd(m, d) != 1) throw DomainError("iterate_exponent requires gcd(m, d) = 1");
  unsigned long n = 1, rest = m;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    unsigned long pt = 1;
    while (rest % p == 0) {
      rest /= p;
      pt *= p;
    }
    n *= (d - 1) % p == 0 ? pt : order_mod(d, pt);
  }
  return n;
}

}  // namespace polydyn
