#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polydyn/decompose.hpp"
#include "polydyn/error.hpp"
#include "polydyn/iterate_cache.hpp"
#include "polydyn/poly.hpp"
#include "polydyn/rational.hpp"
#include "polydyn/symmetry.hpp"

namespace polydyn {

/// D_n(X, alpha) by D_0 = 2, D_1 = X, D_k = X D_{k-1} - alpha D_{k-2}.
template <class K>
Poly<K> dickson(std::size_t n, const K& alpha) {
  using F = FieldTraits<K>;
  Poly<K> prev = Poly<K>::constant(F::from_integer(2));
  if (n == 0) return prev;
  Poly<K> cur = Poly<K>::x();
  for (std::size_t k = 2; k <= n; ++k) {
    Poly<K> next = Poly<K>::x() * cur - alpha * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// alpha^n D_n(X, 1) == D_n(alpha X, alpha^2), checked exactly.
template <class K>
bool dickson_scaling_check(std::size_t n, const K& alpha) {
  if (alpha == FieldTraits<K>::zero()) throw DomainError("dickson_scaling_check requires alpha != 0");
  const Poly<K> lhs = field_pow(alpha, n) * dickson(n, FieldTraits<K>::one());
  const Poly<K> rhs = compose(dickson(n, alpha * alpha), LinearPoly<K>::scaling(alpha));
  return lhs == rhs;
}

/// Parameters of one of the four standard pair families.
///   1: (X, X)
///   2: (X^2, c o X^2)
///   3: (D_2(X,alpha)/alpha, D_2(X,beta)/beta)
///   4: (D_n(X,alpha), -D_n(X cos(pi/n), alpha)), n in {1, 2, 3} over Q
struct StandardPairSpec {
  int kind = 1;
  std::size_t n = 1;
  Rational alpha{1};
  Rational beta{1};
  LinearPoly<Rational> c = LinearPoly<Rational>::identity();
};

std::pair<Poly<Rational>, Poly<Rational>> standard_pair(const StandardPairSpec& spec);

/// F = -beta + gamma H(X + beta), G = -beta + H(X + beta), H in X^r K[X^s].
template <class K>
struct RittForm {
  K beta;
  K gamma;
  Poly<K> h;
  std::size_t r = 0;
  std::size_t s = 0;
};

template <class K>
std::optional<RittForm<K>> ritt_form(const Poly<K>& f, const Poly<K>& g) {
  detail::require_equal_positive_degree(f, g);
  detail::require_degree_two(f, "ritt_form");
  const K beta = -detail::depressing_shift(g);
  const Poly<K> h = Poly<K>::constant(beta) + compose(g, LinearPoly<K>::shift(-beta));
  const K gamma = f.leading() / g.leading();
  const Poly<K> expect_f = Poly<K>::constant(-beta) + gamma * compose(h, LinearPoly<K>::shift(beta));
  if (expect_f != f) return std::nullopt;
  if (Poly<K>::constant(-beta) + compose(h, LinearPoly<K>::shift(beta)) != g)
    throw DomainError("ritt_form: recomposition of G failed");
  const auto [r, s] = detail::exponent_pattern(h);
  if (s >= 1 && field_pow(gamma, s) != FieldTraits<K>::one()) return std::nullopt;
  return RittForm<K>{beta, gamma, h, r, s};
}

/// n = prod q_p over p^t || m; q_p = p^t if p | d-1, else the order of d mod p^t.
unsigned long iterate_exponent(unsigned long m, unsigned long d);

/// Least n <= N_K with F^n = G^n.  Each answer is cross-checked against the
/// classification: a present result needs the Ritt form with
/// gamma^((d^n-1)/(d-1)) = 1, and an absent one needs the classification to
/// rule out every n <= N_K as well.
template <class K>
std::optional<std::size_t> minimal_common_iterate(const Poly<K>& f, const Poly<K>& g) {
  detail::require_equal_positive_degree(f, g);
  detail::require_degree_two(f, "minimal_common_iterate");
  const std::size_t d = f.deg();
  const std::size_t bound = FieldTraits<K>::count_roots_of_unity();
  std::optional<std::size_t> found;
  auto& cache = session_iterates<K>();
  for (std::size_t n = 1; n <= bound && !found; ++n)
    if (cache.get(f, n) == cache.get(g, n)) found = n;

  const auto form = ritt_form(f, g);
  auto predicted = [&](std::size_t n) {
    if (!form) return false;
    unsigned long e = 0, dn = 1;
    for (std::size_t i = 0; i < n; ++i, dn *= d) e += dn;  // (d^n-1)/(d-1)
    return field_pow(form->gamma, e) == FieldTraits<K>::one();
  };
  for (std::size_t n = 1; n <= (found ? *found : bound); ++n) {
    const bool equal = found && n == *found;
    if (predicted(n) != equal)
      throw DomainError("minimal_common_iterate: classification cross-check failed");
  }
  return found;
}

/// Least r <= r_max with f^r = g^r o l for a linear l.
template <class K>
std::optional<std::pair<std::size_t, LinearPoly<K>>> reduction_search(const Poly<K>& f, const Poly<K>& g,
                                                                      std::size_t r_max) {
  detail::require_equal_positive_degree(f, g);
  detail::require_degree_two(f, "reduction_search");
  auto& cache = session_iterates<K>();
  for (std::size_t r = 1; r <= r_max; ++r)
    if (auto l = solve_linear_factor_right(cache.get(f, r), cache.get(g, r))) return std::make_pair(r, *l);
  return std::nullopt;
}

/// F = E o H o a and G = E o c o H o b with H = X^n or D_n(X, 1).
template <class K>
struct BTShape {
  Poly<K> e;
  Poly<K> h;
  LinearPoly<K> a;
  LinearPoly<K> b;
  LinearPoly<K> c;

  friend bool operator==(const BTShape&, const BTShape&) = default;
};

namespace detail {
/// Every (lambda, a) with lambda o H o a = B, where H has no X^{n-1} term.
/// Depressing B pins the intercept of a; the slope p is free for a binomial
/// H - H(0) and otherwise fixed up to sign by the ratio of the top two terms.
template <class K>
std::vector<std::pair<LinearPoly<K>, LinearPoly<K>>> match_shape(const Poly<K>& b, const Poly<K>& h) {
  using F = FieldTraits<K>;
  std::vector<std::pair<LinearPoly<K>, LinearPoly<K>>> out;
  const std::size_t n = h.deg();
  if (b.is_constant() || b.deg() != n) return out;
  const K shift = n >= 2 ? depressing_shift(b) : F::zero();
  const Poly<K> depressed = compose(b, LinearPoly<K>::shift(shift));
  const Poly<K> h_top = h - Poly<K>::constant(h.coeff(0));

  std::vector<K> slopes;
  const auto sup = h_top.support();
  if (sup.size() == 1) {
    slopes.push_back(F::one());
  } else {
    const std::size_t e2 = sup[sup.size() - 2];
    if (depressed.coeff(e2) == F::zero()) return out;
    const K ratio = h_top.coeff(e2) * depressed.leading() / (h.leading() * depressed.coeff(e2));
    slopes = F::nth_roots(ratio, static_cast<unsigned long>(n - e2));
  }
  for (const K& p : slopes) {
    const LinearPoly<K> a(p, -p * shift);
    const Poly<K> ha = compose(h, a);
    if (auto lambda = solve_linear_factor_left(b, ha)) out.emplace_back(*lambda, a);
  }
  return out;
}
}  // namespace detail

/// All shapes with H in {X^n, D_n(X,1)} for n <= n_max dividing deg F, each
/// verified by recomposing F and G.
template <class K>
std::vector<BTShape<K>> bt_shape_search(const Poly<K>& f, const Poly<K>& g, std::size_t n_max) {
  detail::require_equal_positive_degree(f, g);
  detail::require_degree_two(f, "bt_shape_search");
  std::vector<BTShape<K>> out;
  const std::size_t d = f.deg();
  for (std::size_t n = 1; n <= std::min(n_max, d); ++n) {
    if (d % n != 0) continue;
    const auto sf = split(f, n);
    const auto sg = split(g, n);
    if (!sf || !sg) continue;
    std::vector<Poly<K>> shapes{Poly<K>::monomial(FieldTraits<K>::one(), n)};
    const Poly<K> dn = dickson(n, FieldTraits<K>::one());
    if (dn != shapes.front()) shapes.push_back(dn);
    for (const Poly<K>& h : shapes) {
      const auto f_matches = detail::match_shape(sf->inner, h);
      const auto g_matches = detail::match_shape(sg->inner, h);
      for (const auto& [lambda, a] : f_matches) {
        const Poly<K> e = compose(sf->outer, lambda.as_poly());
        for (const auto& [mu, b] : g_matches) {
          for (const auto& kappa : solve_linear_factor_right_all(sg->outer, e)) {
            BTShape<K> shape{e, h, a, b, compose(kappa, mu)};
            const Poly<K> hb = compose(h, shape.b.as_poly());
            if (compose(e, compose(h, a.as_poly())) != f) continue;
            if (compose(e, compose(shape.c.as_poly(), hb)) != g) continue;
            if (std::find(out.begin(), out.end(), shape) == out.end()) out.push_back(std::move(shape));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace polydyn
