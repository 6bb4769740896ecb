// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "golden.hpp"
#include "oracles.hpp"
#include "polydyn/decompose.hpp"
#include "polydyn/dynamics.hpp"
#include "polydyn/funcfield.hpp"
#include "polydyn/ritt.hpp"
#include "polydyn/symmetry.hpp"
#include "support.hpp"

using namespace polydyn;
using namespace polydyn::testing;

namespace {

/// Collects mismatches; a criterion passes when none were recorded.
class Check {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_) {
      os << ", " << failed_ << " failed";
      for (const auto& f : failures_) os << "; " << f;
    }
    return os.str();
  }

private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

QPoly random_inner(Gen& g, std::size_t m) {
  QPoly b = g.poly(m).monic();
  return b - QPoly::constant(b.coeff(0));
}

void dickson_identities(Check& c) {
  for (const Rational& alpha : {Q("0"), Q("1"), Q("-2"), Q("3/5")}) {
    for (std::size_t n = 0; n <= 16; ++n) {
      const QPoly d = dickson(n, alpha);
      // (n+1)^2 distinct nonzero u, with v = alpha/u so that uv = alpha.
      for (std::size_t i = 1; i <= (n + 1) * (n + 1); ++i) {
        const Rational u(BigInt(static_cast<long>(i)), BigInt(3));
        const Rational v = alpha / u;
        c.expect(d(u + v) == u.pow(static_cast<long>(n)) + v.pow(static_cast<long>(n)),
                 "D_" + std::to_string(n) + " at u = " + u.to_string());
      }
      if (!alpha.is_zero()) c.expect(dickson_scaling_check(n, alpha), "scaling n = " + std::to_string(n));
    }
  }
  for (std::size_t n = 1; n <= 16; ++n)
    c.expect(dickson(n, Rational(0)) == QPoly::monomial(Rational(1), n), "D_n(X, 0) = X^n");
}

void decomposition_oracle(Check& c) {
  Gen g(31);
  for (int i = 0; i < 200; ++i) {
    const QPoly a = g.poly(static_cast<std::size_t>(g.integer(1, 5)));
    const QPoly b = random_inner(g, static_cast<std::size_t>(g.integer(1, 5)));
    const auto s = split(compose(a, b), b.deg());
    c.expect(s && s->outer == a && s->inner == b, "random recovery " + format(a) + " o " + format(b));
  }
  oracle::for_each_small_poly(4, 2, false, [&](const QPoly& f) {
    const auto mine = split(f, 2);
    const auto ref = oracle::split_quartic_by_elimination(f);
    const bool same = mine.has_value() == ref.has_value() &&
                      (!mine || (mine->outer == ref->first && mine->inner == ref->second));
    c.expect(same, "quartic " + format(f));
  });
}

void commuting_oracle(Check& c) {
  auto compare = [&](const QPoly& f) {
    const auto mine = commuting_linears(f);
    const auto ref = oracle::commuting_by_search(f, 3, 3);
    if (mine.is_infinite()) {
      c.expect(ref.size() > f.deg(), "infinite family for " + format(f));
      return;
    }
    auto key = [](const auto& x, const auto& y) {
      return std::make_pair(x.second.slope(), x.second.intercept()) < std::make_pair(y.second.slope(), y.second.intercept());
    };
    auto a = mine.pairs, b = ref;
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    c.expect(a == b, "pairs for " + format(f));
    c.expect(mine.pairs.size() < f.deg(), "count < deg for " + format(f));
  };
  oracle::for_each_small_poly(3, 2, true, compare);
  Gen g(42);
  for (int i = 0; i < 100; ++i) compare(g.int_poly(4, 3));
}

void common_iterate(Check& c) {
  const QPoly f = P("x^3+x"), g = P("-x^3-x");
  c.expect(minimal_common_iterate(f, g) == std::optional<std::size_t>(2), "minimal common iterate is 2");
  c.expect(compose(f, f) == compose(g, g), "F^2 = G^2");
  c.expect(f != g, "F != G");
  for (unsigned long m = 1; m <= 20; ++m)
    for (unsigned long d = 2; d <= 10; ++d) {
      if (std::gcd(m, d) != 1) continue;
      const unsigned long n = iterate_exponent(m, d);
      BigInt dn;
      mpz_ui_pow_ui(dn.get_mpz_t(), d, n);
      const BigInt sum = (dn - 1) / (d - 1);
      c.expect(n <= m && mpz_divisible_ui_p(sum.get_mpz_t(), m) != 0,
               "iterate_exponent(" + std::to_string(m) + ", " + std::to_string(d) + ")");
    }
}

void canonical_heights(Check& c) {
  const auto e = canonical_height(P("x^2"), Rational(2), 10);
  const Real diff = e.value - log_of(BigInt(2));
  c.expect((diff < 0 ? Real(-diff) : diff) < Real("1e-12"), "h(X^2, 2) = log 2");
  const QPoly f = P("x^2+1");
  for (std::size_t k = 4; k <= 12; ++k) {
    const auto a = canonical_height(f, Rational(1), k);
    const auto b = canonical_height(f, Rational(1), k + 1);
    const Real gap = a.value - b.value;
    c.expect((gap < 0 ? Real(-gap) : gap) <= a.error_bound, "Cauchy gap at k = " + std::to_string(k));
  }
}

void preperiodicity(Check& c) {
  for (const char* cc : {"0", "1", "-1", "-2"})
    for (const char* x : {"0", "1", "-1", "2", "-2", "1/2", "-1/2"}) {
      const QPoly f = QPoly::monomial(Rational(1), 2) + QPoly::constant(Q(cc));
      const auto r = is_preperiodic(f, Q(x));
      const auto ref = oracle::preperiodic_by_enumeration(f, Q(x), 64, BigInt(1000000));
      const std::string where = format(f) + " at " + x;
      c.expect(r.verdict != Preperiodicity::Undecided, "undecided for " + where);
      c.expect(ref && (r.verdict == Preperiodicity::Preperiodic) == *ref, "verdict for " + where);
    }
}

void linearprop(Check& c) {
  const auto odd = linearprop_check(P("x^3+x"), QLinear(Rational(-1), Rational(0)), 6);
  c.expect(odd.k == std::optional<std::size_t>(2), "k = 2 for X^3+X, -X");
  const QPoly f = P("2*x^3");
  const QLinear l(Rational(5), Rational(0));
  const auto mono = linearprop_check(f, l, 6);
  c.expect(mono.branch == LinearpropBranch::MonomialConjugate, "monomial-conjugate branch for 2X^3, 5X");
  c.expect(!mono.hits.empty(), "some witness for 2X^3, 5X");
  const QPoly fl = compose(f, l.as_poly());
  for (const auto& h : mono.hits)
    for (const auto& w : h.witnesses)
      c.expect(iterate(f, h.n) == compose(iterate(fl, h.n), w.as_poly()), "witness at n = " + std::to_string(h.n));
}

void specialization(Check& c) {
  Gen gen(82);
  auto good_point = [&](const std::vector<FFPoly>& fs) {
    while (true) {
      const Rational pt = gen.rational(30, 7);
      if (std::all_of(fs.begin(), fs.end(), [&](const FFPoly& f) { return specialize(f, pt).has_value(); })) return pt;
    }
  };
  // 50 points: composition for 25 random pairs, iteration for 5 quadratics at 5 points each.
  for (int i = 0; i < 25; ++i) {
    const FFPoly f = gen.ffpoly(static_cast<std::size_t>(gen.integer(1, 3)));
    const FFPoly g = gen.ffpoly(static_cast<std::size_t>(gen.integer(1, 3)));
    const FFPoly fg = compose(f, g);
    const Rational pt = good_point({f, g, fg});
    c.expect(*specialize(fg, pt) == compose(*specialize(f, pt), *specialize(g, pt)), "composition at " + pt.to_string());
  }
  for (int i = 0; i < 5; ++i) {
    const FFPoly f = gen.ffpoly(2);
    std::vector<FFPoly> its{f};
    for (int n = 2; n <= 4; ++n) its.push_back(compose(f, its.back()));
    for (int s = 0; s < 5; ++s) {
      const Rational pt = good_point(its);
      for (std::size_t n = 1; n <= 4; ++n)
        c.expect(*specialize(its[n - 1], pt) == iterate(*specialize(f, pt), n), "iterate at " + pt.to_string());
    }
  }
  const FFPoly tx2 = FF("t*x^2");
  const auto iso = is_isotrivial(tx2);
  bool verified = iso.kind == Isotriviality::WithQtWitness && iso.witness.has_value();
  if (verified) {
    const FFPoly conj = compose(iso.witness->inverse(), compose(tx2, *iso.witness));
    for (const auto& coeff : conj.coefficients()) verified = verified && coeff.is_constant();
  }
  c.expect(verified, "tX^2 has a verified witness");
  c.expect(is_isotrivial(FF("x^2+t")).kind == Isotriviality::NotIsotrivial, "X^2+t not isotrivial over Q(t)");
  std::vector<Rational> cands;
  for (long k = -5; k <= 5; ++k) cands.emplace_back(k);
  const FFPoly q = FF("x^2+t");
  std::set<Rational> failing;
  for (const auto& r : specialization_survey(q, q, RatFunc(0), RatFunc(0), cands))
    if (!r.condition3) failing.insert(r.point);
  c.expect(failing == std::set<Rational>{Rational(-2), Rational(-1), Rational(0)}, "condition 3 fails exactly at 0, -1, -2");
}

void bt_recomposition(Check& c) {
  Gen g(91);
  const std::vector<StandardPairSpec> specs = {
      {1, 1, Rational(1), Rational(1), QLinear::identity()},
      {2, 2, Rational(1), Rational(1), QLinear(Rational(3), Rational(-2))},
      {3, 2, Rational(2), Rational(-5), QLinear::identity()},
      {4, 3, Rational(1), Rational(1), QLinear::identity()},
      {4, 3, Rational(4), Rational(1), QLinear::identity()},
      {4, 3, Q("9/4"), Rational(1), QLinear::identity()},
      {4, 3, Rational(0), Rational(1), QLinear::identity()},
      {4, 1, Rational(1), Rational(1), QLinear::identity()},
  };
  for (int i = 0; i < 20; ++i) {
    const auto& spec = specs[static_cast<std::size_t>(i) % specs.size()];
    const auto [f1, g1] = standard_pair(spec);
    const std::size_t max_e = 24 / f1.deg() < 8 ? 24 / f1.deg() : 8;
    const QPoly e = g.poly(static_cast<std::size_t>(g.integer(2, static_cast<long>(max_e))), 3, 2);
    const QLinear a = g.linear(3, 2), b = g.linear(3, 2);
    const QPoly f = compose(e, compose(f1, a.as_poly()));
    const QPoly gg = compose(e, compose(g1, b.as_poly()));
    const auto shapes = bt_shape_search(f, gg, f1.deg());
    const std::string where = "construction " + std::to_string(i) + " (deg " + std::to_string(f.deg()) + ")";
    c.expect(!shapes.empty(), "no shape for " + where);
    for (const auto& s : shapes) {
      c.expect(compose(s.e, compose(s.h, s.a.as_poly())) == f, "F recomposition for " + where);
      c.expect(compose(s.e, compose(s.c.as_poly(), compose(s.h, s.b.as_poly()))) == gg, "G recomposition for " + where);
    }
  }
}

void golden_corpus(Check& c) {
  const auto cases = load_golden_cases();
  c.expect(cases.size() >= 30, "at least 30 golden cases (found " + std::to_string(cases.size()) + ")");
  std::set<std::string> seen;
  for (const auto& gc : cases) {
    seen.insert(gc.args.empty() ? "" : gc.args.front());
    const auto r = run_case(gc, true);
    c.expect(r.code == gc.exit_code, gc.name + " exit code");
    c.expect(r.out == gc.json.value_or(""), gc.name + " JSON output");
  }
  for (const char* v : core_verbs) c.expect(seen.count(v) > 0, std::string("verb ") + v + " covered");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Dickson identity suite", dickson_identities},
      {"Decomposition oracle equivalence", decomposition_oracle},
      {"Commuting-linears oracle equivalence", commuting_oracle},
      {"Common iterate and iterate exponent", common_iterate},
      {"Canonical height estimates", canonical_heights},
      {"Preperiodicity against enumeration", preperiodicity},
      {"Linearprop dichotomy", linearprop},
      {"Specialization and isotriviality", specialization},
      {"Shape search recomposition", bt_recomposition},
      {"CLI golden corpus", golden_corpus},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string note;
    try {
      criteria[i].second(c);
      note = c.summary();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
      note = c.summary();
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << note << ")\n";
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
