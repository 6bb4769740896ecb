#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydyn/error.hpp"
#include "polydyn/poly.hpp"

namespace polydyn {

/// F = -alpha + core(X - beta), where core has no X^{d-1} term and no
/// constant term and lies in X^r K[X^s] with s maximal.  s = 0 and r = d
/// exactly when core is a monomial.
template <class K>
struct TwistNormalForm {
  K beta;
  K alpha;
  std::size_t r = 0;
  std::size_t s = 0;
  Poly<K> core;
};

namespace detail {
template <class K>
void require_degree_two(const Poly<K>& f, const char* what) {
  if (f.is_constant() || f.deg() < 2) throw DomainError(std::string(what) + " requires deg(F) >= 2");
}

/// (r, s) for a polynomial without constant term: r is the least exponent and
/// s the gcd of exponent differences (0 for a monomial).
template <class K>
std::pair<std::size_t, std::size_t> exponent_pattern(const Poly<K>& p) {
  const auto support = p.support();
  std::size_t s = 0;
  for (std::size_t e : support) s = std::gcd(s, e - support.front());
  return {s == 0 ? p.deg() : support.front(), s};
}

/// beta = -theta_{d-1} / (d theta_d): the shift that kills the X^{d-1} term.
template <class K>
K depressing_shift(const Poly<K>& f) {
  const std::size_t d = f.deg();
  return -f.coeff(d - 1) / (FieldTraits<K>::from_integer(static_cast<long>(d)) * f.leading());
}
}  // namespace detail

template <class K>
TwistNormalForm<K> twist_normal_form(const Poly<K>& f) {
  detail::require_degree_two(f, "twist_normal_form");
  const K beta = detail::depressing_shift(f);
  const K alpha = -f(beta);
  Poly<K> core = compose(f, LinearPoly<K>::shift(beta)) + Poly<K>::constant(alpha);
  const auto [r, s] = detail::exponent_pattern(core);
  return {beta, alpha, r, s, std::move(core)};
}

/// The one-parameter family b = beta + g(X - beta), a = -alpha + g^d (X + alpha)
/// of solutions to a o F = F o b, valid for every nonzero g when the normal
/// form core is a monomial.
template <class K>
struct InfiniteFamily {
  K beta;
  K alpha;
  std::size_t d = 0;

  std::pair<LinearPoly<K>, LinearPoly<K>> member(const K& gamma) const {
    const K gd = field_pow(gamma, d);
    return {LinearPoly<K>(gd, gd * alpha - alpha), LinearPoly<K>(gamma, beta - gamma * beta)};
  }
};

/// Solutions (a, b) of a o F = F o b: a finite list, or an infinite family.
template <class K>
struct CommutingLinears {
  std::vector<std::pair<LinearPoly<K>, LinearPoly<K>>> pairs;
  std::optional<InfiniteFamily<K>> family;
  TwistNormalForm<K> normal_form;

  bool is_infinite() const { return family.has_value(); }
};

template <class K>
CommutingLinears<K> commuting_linears(const Poly<K>& f) {
  detail::require_degree_two(f, "commuting_linears");
  CommutingLinears<K> out{{}, std::nullopt, twist_normal_form(f)};
  const auto& nf = out.normal_form;
  if (nf.s == 0) {
    InfiniteFamily<K> family{nf.beta, nf.alpha, f.deg()};
    const auto [a, b] = family.member(FieldTraits<K>::from_integer(2));
    if (compose(a, f) != compose(f, b)) throw DomainError("commuting_linears: family check failed");
    out.family = family;
    return out;
  }
  for (const K& gamma : FieldTraits<K>::roots_of_unity(nf.s)) {
    const K gr = field_pow(gamma, nf.r);
    LinearPoly<K> b(gamma, nf.beta - gamma * nf.beta);
    LinearPoly<K> a(gr, gr * nf.alpha - nf.alpha);
    if (compose(a, f) == compose(f, b)) out.pairs.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

/// F = v^-1 o epsilon X^d o v.
template <class K>
struct MonomialConjugacy {
  LinearPoly<K> v;
  K epsilon;
  std::size_t d = 0;
};

/// Present iff F is linearly conjugate to a monomial.  That needs a monomial
/// core and also -alpha = beta, so that the critical point is fixed; then
/// v = X - beta and epsilon = theta_d.
template <class K>
std::optional<MonomialConjugacy<K>> is_monomial_conjugate(const Poly<K>& f) {
  detail::require_degree_two(f, "is_monomial_conjugate");
  const auto nf = twist_normal_form(f);
  if (nf.s != 0 || !(nf.alpha == -nf.beta)) return std::nullopt;
  MonomialConjugacy<K> out{LinearPoly<K>::shift(-nf.beta), f.leading(), f.deg()};
  const Poly<K> model = Poly<K>::monomial(out.epsilon, out.d);
  if (compose(out.v.inverse(), compose(model, out.v)) != f) return std::nullopt;
  return out;
}

template <class K>
struct LinearpropEntry {
  std::size_t n = 0;
  std::vector<LinearPoly<K>> witnesses;  // every l_n with F^n = (F o l)^n o l_n
};

enum class LinearpropBranch { CommonIterate, MonomialConjugate, Both, Inconclusive };

template <class K>
struct LinearpropReport {
  std::vector<LinearpropEntry<K>> hits;        // the set S, ascending n
  std::optional<std::pair<std::size_t, std::size_t>> equal_pair;  // least (n, N) with l_n = l_N
  std::optional<std::size_t> k;                // N - n from equal_pair, F^k = (F o l)^k verified
  std::optional<std::size_t> least_common_k;   // least k <= n_max with F^k = (F o l)^k
  std::optional<MonomialConjugacy<K>> monomial;
  std::optional<K> delta;                      // l = v^-1 o delta X o v
  LinearpropBranch branch = LinearpropBranch::Inconclusive;
};

template <class K>
LinearpropReport<K> linearprop_check(const Poly<K>& f, const LinearPoly<K>& l, std::size_t n_max) {
  detail::require_degree_two(f, "linearprop_check");
  LinearpropReport<K> rep;
  const Poly<K> fl = compose(f, l.as_poly());
  Poly<K> fn = Poly<K>::x(), fln = Poly<K>::x();
  for (std::size_t n = 1; n <= n_max; ++n) {
    fn = compose(f, fn);
    fln = compose(fl, fln);
    if (!rep.least_common_k && fn == fln) rep.least_common_k = n;
    auto sols = solve_linear_factor_right_all(fn, fln);
    if (sols.empty()) continue;
    if (!rep.equal_pair)
      for (const auto& earlier : rep.hits) {
        const bool shared = std::any_of(sols.begin(), sols.end(), [&](const LinearPoly<K>& s) {
          return std::find(earlier.witnesses.begin(), earlier.witnesses.end(), s) != earlier.witnesses.end();
        });
        if (shared) {
          rep.equal_pair = std::make_pair(earlier.n, n);
          break;
        }
      }
    rep.hits.push_back({n, std::move(sols)});
  }
  if (rep.equal_pair) {
    const std::size_t k = rep.equal_pair->second - rep.equal_pair->first;
    if (iterate(f, k) != iterate(fl, k)) throw DomainError("linearprop_check: k-extraction check failed");
    rep.k = k;
  }
  rep.monomial = is_monomial_conjugate(f);
  if (rep.monomial) {
    const LinearPoly<K> m = compose(rep.monomial->v, compose(l, rep.monomial->v.inverse()));
    if (m.intercept() == FieldTraits<K>::zero()) rep.delta = m.slope();
  }
  const bool common = rep.k || rep.least_common_k;
  const bool mono = rep.monomial && rep.delta;
  rep.branch = common && mono ? LinearpropBranch::Both
               : common       ? LinearpropBranch::CommonIterate
               : mono         ? LinearpropBranch::MonomialConjugate
                              : LinearpropBranch::Inconclusive;
  return rep;
}

}  // namespace polydyn
