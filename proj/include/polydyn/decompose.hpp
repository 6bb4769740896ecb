#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydyn/error.hpp"
#include "polydyn/poly.hpp"

namespace polydyn {

/// F = outer o inner with inner monic and inner(0) = 0.
template <class K>
struct Splitting {
  Poly<K> outer;
  Poly<K> inner;
  std::size_t inner_degree = 0;

  friend bool operator==(const Splitting&, const Splitting&) = default;
};

/// The normalized decomposition F = A o B with deg B = m, if there is one.
///
/// The top m-1 non-leading coefficients of F involve only the leading term of A
/// and the coefficients of B, so they fix B one coefficient at a time from the
/// top.  A is then read off as the B-adic expansion of F, and a final
/// recomposition decides existence.
template <class K>
std::optional<Splitting<K>> split(const Poly<K>& f, std::size_t m) {
  using F = FieldTraits<K>;
  if (f.is_constant()) throw DomainError("split requires deg(F) >= 1");
  const std::size_t d = f.deg();
  if (m == 0 || d % m != 0) throw DomainError("split requires m to divide deg(F)");
  const std::size_t n = d / m;
  const K lead = f.leading();

  std::vector<K> b(m + 1, F::zero());
  b[m] = F::one();
  const K n_k = F::from_integer(static_cast<long>(n));
  for (std::size_t k = 1; k < m; ++k) {
    // coefficient of X^{nm-k} in B^n is n*b_{m-k} plus terms in b_{m-1}..b_{m-k+1}
    const K partial = power(Poly<K>(b), n).coeff(d - k);
    b[m - k] = (f.coeff(d - k) / lead - partial) / n_k;
  }
  const Poly<K> inner(std::move(b));

  std::vector<K> a;
  a.reserve(n + 1);
  Poly<K> rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, inner);
    if (!r.is_constant()) return std::nullopt;
    a.push_back(r.coeff(0));
    rest = std::move(q);
  }
  Poly<K> outer(std::move(a));
  if (compose(outer, inner) != f) return std::nullopt;
  return Splitting<K>{std::move(outer), inner, m};
}

/// One normalized splitting per divisor m of deg F for which split succeeds,
/// in increasing m; always includes m = 1 and m = deg F.
template <class K>
std::vector<Splitting<K>> all_splits(const Poly<K>& f) {
  if (f.is_constant() || f.deg() < 2) throw DomainError("all_splits requires deg(F) >= 2");
  std::vector<Splitting<K>> out;
  const std::size_t d = f.deg();
  for (std::size_t m = 1; m <= d; ++m)
    if (d % m == 0)
      if (auto s = split(f, m)) out.push_back(std::move(*s));
  return out;
}

/// Given A o B = C o D with deg B = deg D, the linear l with A = C o l^-1 and
/// B = l o D.
template <class K>
LinearPoly<K> uniq_witness(const Poly<K>& a, const Poly<K>& b, const Poly<K>& c, const Poly<K>& d) {
  if (a.is_constant() || b.is_constant() || c.is_constant() || d.is_constant())
    throw DomainError("uniq_witness requires nonconstant A, B, C, D");
  if (b.deg() != d.deg()) throw DomainError("uniq_witness requires deg(B) = deg(D)");
  if (compose(a, b) != compose(c, d)) throw DomainError("uniq_witness requires A o B = C o D");
  auto l = solve_linear_factor_left(b, d);
  if (!l || compose(c, l->inverse()) != a)
    throw DomainError("uniq_witness: no linear l with A = C o l^-1 and B = l o D");
  return *l;
}

/// Decomposition data for the two-to-one reduction: F = E o H o a,
/// G = E o c o H o b, F^t = E~ o H o a~, G^t = E~ o c~ o H o b~.
template <class K>
struct TwoToOneData {
  Poly<K> f, g, e, e_tilde, h;
  LinearPoly<K> a, b, c, a_tilde, b_tilde, c_tilde;
  std::size_t t = 2;
};

/// The linear e with F^{t-1} = G^{t-1} o e.
template <class K>
LinearPoly<K> two_to_one(const TwoToOneData<K>& in) {
  if (in.t < 2) throw DomainError("two_to_one requires t >= 2");
  const Poly<K> h_a = compose(in.h, in.a);
  const Poly<K> h_a_tilde = compose(in.h, in.a_tilde);
  const Poly<K> ch_b = compose(in.c, compose(in.h, in.b));
  const Poly<K> ch_b_tilde = compose(in.c_tilde, compose(in.h, in.b_tilde));
  const Poly<K> f_t = iterate(in.f, in.t);
  const Poly<K> g_t = iterate(in.g, in.t);
  if (compose(in.e, h_a) != in.f) throw DomainError("hypothesis F = E o H o a fails");
  if (compose(in.e, ch_b) != in.g) throw DomainError("hypothesis G = E o c o H o b fails");
  if (compose(in.e_tilde, h_a_tilde) != f_t) throw DomainError("hypothesis F^t = E~ o H o a~ fails");
  if (compose(in.e_tilde, ch_b_tilde) != g_t)
    throw DomainError("hypothesis G^t = E~ o c~ o H o b~ fails");

  const Poly<K> f_prev = iterate(in.f, in.t - 1);
  const Poly<K> g_prev = iterate(in.g, in.t - 1);
  const LinearPoly<K> l1 = uniq_witness(compose(f_prev, in.e), h_a, in.e_tilde, h_a_tilde);
  const LinearPoly<K> l2 = uniq_witness(compose(g_prev, in.e), ch_b, in.e_tilde, ch_b_tilde);
  // F^{t-1} o (E o l1) = E~ = G^{t-1} o (E o l2)
  const LinearPoly<K> l =
      uniq_witness(f_prev, compose(in.e, l1.as_poly()), g_prev, compose(in.e, l2.as_poly()));
  const LinearPoly<K> e = l.inverse();
  if (compose(g_prev, e) != f_prev) throw DomainError("two_to_one: recomposition check failed");
  return e;
}

}  // namespace polydyn
