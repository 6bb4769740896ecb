#include "polydyn/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "polydyn/decompose.hpp"
#include "polydyn/dynamics.hpp"
#include "polydyn/error.hpp"
#include "polydyn/expr.hpp"
#include "polydyn/funcfield.hpp"
#include "polydyn/ritt.hpp"
#include "polydyn/symmetry.hpp"

namespace polydyn::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string verb;
  std::vector<std::string> pos;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> n_max;
  unsigned precision = height_output_digits;
};

void arity(const Args& a, std::size_t lo, std::size_t hi, const char* shape) {
  if (a.pos.size() < lo || a.pos.size() > hi) throw UsageError("usage: " + a.verb + " " + shape);
}

std::size_t count(const std::string& s, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
  return v;
}

QPoly poly(const std::string& s) { return parse_poly(s); }
FFPoly ffpoly(const std::string& s) { return parse_ffpoly(s); }
Rational rat(const std::string& s) { return parse_rational(s); }
RatFunc ratfunc(const std::string& s) { return parse_ratfunc(s); }

QLinear linear(const std::string& s) {
  auto l = QLinear::from_poly(poly(s));
  if (!l) throw DomainError("expected a linear polynomial, got '" + s + "'");
  return *l;
}

/// Orbit points grow by a factor of about deg(f) in size per step.
void orbit_guard(const QPoly& f, std::size_t steps) {
  if (f.is_constant() || f.deg() < 2) return;
  if (static_cast<double>(steps) * std::log2(static_cast<double>(f.deg())) > 20.0)
    throw DomainError("orbit of length " + std::to_string(steps) + " is too long for degree " +
                      std::to_string(f.deg()) + " (sizes grow like deg^n; keep deg^n <= 2^20)");
}

void iterate_guard(const QPoly& f, std::size_t n) {
  if (f.is_constant() || f.deg() < 2) return;
  if (static_cast<double>(n) * std::log2(static_cast<double>(f.deg())) > 12.0)
    throw DomainError("iterate degree " + std::to_string(f.deg()) + "^" + std::to_string(n) + " exceeds 4096");
}

json q(const Rational& r) { return r.to_string(); }
json p(const QPoly& f) { return format(f); }
json lin(const QLinear& l) { return format(l); }
json ff(const FFPoly& f) { return format(f); }
template <class T, class F>
json opt(const std::optional<T>& v, F&& f) {
  return v ? json(f(*v)) : json(nullptr);
}

json real_value(const Real& x, const Args& a) { return to_decimal(x, a.precision); }

const char* verdict_name(Preperiodicity v) {
  switch (v) {
    case Preperiodicity::Preperiodic: return "preperiodic";
    case Preperiodicity::NotPreperiodic: return "not-preperiodic";
    case Preperiodicity::Undecided: return "undecided";
  }
  return "undecided";
}

json verdict_bool(Preperiodicity v) {
  if (v == Preperiodicity::Undecided) return nullptr;
  return v == Preperiodicity::Preperiodic;
}

// --- verbs -----------------------------------------------------------------

json do_iterate(const Args& a) {
  arity(a, 2, 2, "F N");
  const QPoly f = poly(a.pos[0]);
  const std::size_t n = count(a.pos[1], "N");
  iterate_guard(f, n);
  return {{"result", format(iterate(f, n))}};
}

json do_compose(const Args& a) {
  arity(a, 2, 2, "F G");
  return {{"result", format(compose(poly(a.pos[0]), poly(a.pos[1])))}};
}

json do_split(const Args& a) {
  arity(a, 1, 2, "F [M]");
  const QPoly f = poly(a.pos[0]);
  if (a.pos.size() == 2) {
    const auto s = split(f, count(a.pos[1], "M"));
    return {{"found", s.has_value()},
            {"outer", opt(s, [](const auto& x) { return format(x.outer); })},
            {"inner", opt(s, [](const auto& x) { return format(x.inner); })}};
  }
  json list = json::array();
  for (const auto& s : all_splits(f))
    list.push_back({{"inner_degree", s.inner_degree}, {"outer", format(s.outer)}, {"inner", format(s.inner)}});
  return {{"count", list.size()}, {"splittings", list}};
}

json do_commute(const Args& a) {
  arity(a, 1, 1, "F");
  const auto res = commuting_linears(poly(a.pos[0]));
  json out{{"infinite", res.is_infinite()}};
  if (res.family) {
    out["family"] = {{"beta", q(res.family->beta)}, {"alpha", q(res.family->alpha)}, {"d", res.family->d}};
    out["rule"] = "a = g^d*x + (g^d - 1)*alpha, b = g*x + (1 - g)*beta for every nonzero g";
    return out;
  }
  json pairs = json::array();
  for (const auto& [x, y] : res.pairs) pairs.push_back({{"a", format(x)}, {"b", format(y)}});
  out["count"] = pairs.size();
  out["pairs"] = pairs;
  return out;
}

json do_linearprop(const Args& a) {
  arity(a, 2, 2, "F L");
  const auto rep = linearprop_check(poly(a.pos[0]), linear(a.pos[1]), a.n_max.value_or(6));
  json hits = json::array();
  for (const auto& h : rep.hits) {
    json w = json::array();
    for (const auto& l : h.witnesses) w.push_back(format(l));
    hits.push_back({{"n", h.n}, {"witnesses", w}});
  }
  const char* branch = rep.branch == LinearpropBranch::Both              ? "both"
                       : rep.branch == LinearpropBranch::CommonIterate     ? "common-iterate"
                       : rep.branch == LinearpropBranch::MonomialConjugate ? "monomial-conjugate"
                                                                           : "inconclusive";
  return {{"branch", branch},
          {"hits", hits},
          {"equal_pair", opt(rep.equal_pair, [](const auto& pr) { return json::array({pr.first, pr.second}); })},
          {"k", opt(rep.k, [](std::size_t k) { return k; })},
          {"least_common_k", opt(rep.least_common_k, [](std::size_t k) { return k; })},
          {"monomial", opt(rep.monomial, [](const auto& m) { return json{{"v", format(m.v)}, {"epsilon", q(m.epsilon)}}; })},
          {"delta", opt(rep.delta, [](const Rational& d) { return q(d); })}};
}

json do_common_iterate(const Args& a) {
  arity(a, 2, 2, "F G");
  const auto n = minimal_common_iterate(poly(a.pos[0]), poly(a.pos[1]));
  return {{"n", opt(n, [](std::size_t k) { return k; })}};
}

json do_dickson(const Args& a) {
  arity(a, 2, 2, "N ALPHA");
  const std::size_t n = count(a.pos[0], "N");
  if (n > 4096) throw DomainError("dickson degree above 4096");
  return {{"result", format(dickson(n, rat(a.pos[1])))}};
}

json do_standard_pair(const Args& a) {
  arity(a, 1, 3, "KIND [args]  (1 | 2 C | 3 ALPHA BETA | 4 N ALPHA)");
  StandardPairSpec spec;
  spec.kind = static_cast<int>(count(a.pos[0], "KIND"));
  switch (spec.kind) {
    case 1: arity(a, 1, 1, "1"); break;
    case 2:
      arity(a, 1, 2, "2 [C]");
      if (a.pos.size() == 2) spec.c = linear(a.pos[1]);
      break;
    case 3:
      arity(a, 3, 3, "3 ALPHA BETA");
      spec.alpha = rat(a.pos[1]);
      spec.beta = rat(a.pos[2]);
      break;
    case 4:
      arity(a, 3, 3, "4 N ALPHA");
      spec.n = count(a.pos[1], "N");
      spec.alpha = rat(a.pos[2]);
      break;
    default: throw DomainError("standard pair kind must be 1, 2, 3 or 4");
  }
  const auto [f, g] = standard_pair(spec);
  return {{"f", format(f)}, {"g", format(g)}};
}

json do_bt_search(const Args& a) {
  arity(a, 2, 2, "F G");
  const QPoly f = poly(a.pos[0]);
  const QPoly g = poly(a.pos[1]);
  const std::size_t n_max = a.n_max.value_or(f.is_constant() ? 1 : f.deg());
  json shapes = json::array();
  for (const auto& s : bt_shape_search(f, g, n_max))
    shapes.push_back({{"e", format(s.e)}, {"h", format(s.h)}, {"a", format(s.a)}, {"b", format(s.b)}, {"c", format(s.c)}});
  return {{"count", shapes.size()}, {"shapes", shapes}};
}

json do_orbit(const Args& a) {
  arity(a, 2, 2, "F X0");
  const QPoly f = poly(a.pos[0]);
  const std::size_t n = a.n_max.value_or(10);
  orbit_guard(f, n);
  Orbit o(f, rat(a.pos[1]));
  json pts = json::array();
  for (const auto& x : o.prefix(n)) pts.push_back(q(x));
  return {{"points", pts}};
}

json do_intersect(const Args& a) {
  arity(a, 4, 4, "F G X0 Y0");
  const QPoly f = poly(a.pos[0]), g = poly(a.pos[1]);
  const std::size_t m = a.k_max.value_or(a.n_max.value_or(8));
  const std::size_t n = a.n_max.value_or(8);
  orbit_guard(f, m);
  orbit_guard(g, n);
  json pairs = json::array();
  for (const auto& [i, j] : orbit_intersection(f, g, rat(a.pos[2]), rat(a.pos[3]), m, n)) pairs.push_back({i, j});
  return {{"count", pairs.size()}, {"pairs", pairs}};
}

json do_diagonal(const Args& a) {
  arity(a, 4, 4, "F G X0 Y0");
  const QPoly f = poly(a.pos[0]), g = poly(a.pos[1]);
  const std::size_t n = a.n_max.value_or(10);
  orbit_guard(f, n);
  orbit_guard(g, n);
  return {{"hits", diagonal_hits(f, g, rat(a.pos[2]), rat(a.pos[3]), n)}};
}

json do_line_periodic(const Args& a) {
  arity(a, 4, 4, "F G ALPHA BETA");
  const QPoly f = poly(a.pos[0]), g = poly(a.pos[1]);
  const std::size_t k = a.k_max.value_or(6);
  iterate_guard(f, k);
  iterate_guard(g, k);
  const auto r = line_periodicity(f, g, rat(a.pos[2]), rat(a.pos[3]), k);
  return {{"k", opt(r, [](std::size_t v) { return v; })}};
}

json do_height(const Args& a) {
  arity(a, 1, 1, "X");
  return {{"height", real_value(weil_height(rat(a.pos[0])), a)}, {"precision_digits", a.precision}};
}

json do_canonical_height(const Args& a) {
  arity(a, 2, 3, "F X [K]");
  const QPoly f = poly(a.pos[0]);
  const std::size_t k = a.pos.size() == 3 ? count(a.pos[2], "K") : a.k_max.value_or(10);
  orbit_guard(f, k);
  const auto e = canonical_height(f, rat(a.pos[1]), k);
  return {{"value", real_value(e.value, a)},
          {"error_bound", real_value(e.error_bound, a)},
          {"iterations_used", e.iterations_used},
          {"precision_digits", a.precision}};
}

json do_preperiodic(const Args& a) {
  arity(a, 2, 2, "F X");
  const auto r = is_preperiodic(poly(a.pos[0]), rat(a.pos[1]), a.n_max.value_or(default_preperiodic_cap));
  return {{"preperiodic", verdict_bool(r.verdict)},
          {"verdict", verdict_name(r.verdict)},
          {"preperiod", opt(r.preperiod, [](std::size_t v) { return v; })},
          {"period", opt(r.period, [](std::size_t v) { return v; })},
          {"steps", r.steps}};
}

json do_specialize(const Args& a) {
  arity(a, 2, 2, "F C");
  const auto s = specialize(ffpoly(a.pos[0]), rat(a.pos[1]));
  return {{"result", opt(s, [](const QPoly& x) { return format(x); })}, {"good_reduction", s.has_value()}};
}

json do_isotrivial(const Args& a) {
  arity(a, 1, 1, "F");
  const auto r = is_isotrivial(ffpoly(a.pos[0]));
  const char* kind = r.kind == Isotriviality::WithQtWitness       ? "witness"
                     : r.kind == Isotriviality::OverExtensionOnly ? "extension-only"
                                                                  : "not-isotrivial";
  return {{"isotrivial", r.kind != Isotriviality::NotIsotrivial},
          {"kind", kind},
          {"witness", opt(r.witness, [](const FFLinear& l) { return format(l.as_poly()); })},
          {"conjugated", opt(r.conjugated, [](const QPoly& x) { return format(x); })},
          {"root_degree", r.root_degree}};
}

json do_survey(const Args& a) {
  if (a.pos.size() < 5) throw UsageError("usage: survey F G X0 Y0 C1 [C2 ...]");
  SurveyBounds bounds;
  bounds.k_max = a.k_max.value_or(bounds.k_max);
  bounds.orbit_max = a.n_max.value_or(bounds.orbit_max);
  std::vector<Rational> cs;
  for (std::size_t i = 4; i < a.pos.size(); ++i) cs.push_back(rat(a.pos[i]));
  const FFPoly f = ffpoly(a.pos[0]), g = ffpoly(a.pos[1]);
  if (!f.is_constant()) iterate_guard(QPoly::monomial(Rational(1), f.deg()), bounds.k_max);
  const auto reps = specialization_survey(f, g, ratfunc(a.pos[2]), ratfunc(a.pos[3]), cs, bounds);
  json list = json::array();
  for (const auto& r : reps)
    list.push_back({{"point", q(r.point)},
                    {"good_reduction", r.good_reduction},
                    {"f", opt(r.f, [](const QPoly& x) { return format(x); })},
                    {"g", opt(r.g, [](const QPoly& x) { return format(x); })},
                    {"x0", opt(r.x0, [](const Rational& x) { return q(x); })},
                    {"y0", opt(r.y0, [](const Rational& x) { return q(x); })},
                    {"condition1", r.condition1},
                    {"condition2", r.condition2},
                    {"common_iterate", opt(r.common_iterate, [](std::size_t v) { return v; })},
                    {"condition3", r.condition3},
                    {"verdict", opt(r.verdict, [](Preperiodicity v) { return verdict_name(v); })}});
  return {{"k_max", bounds.k_max}, {"reports", list}};
}

// Extras beyond the core verbs.

json do_reduction(const Args& a) {
  arity(a, 2, 2, "F G");
  const QPoly f = poly(a.pos[0]), g = poly(a.pos[1]);
  const std::size_t r_max = a.k_max.value_or(3);
  iterate_guard(f, r_max);
  const auto r = reduction_search(f, g, r_max);
  return {{"r", opt(r, [](const auto& x) { return x.first; })},
          {"l", opt(r, [](const auto& x) { return format(x.second); })}};
}

json do_iterate_exponent(const Args& a) {
  arity(a, 2, 2, "M D");
  return {{"n", iterate_exponent(count(a.pos[0], "M"), count(a.pos[1], "D"))}};
}

json do_twist(const Args& a) {
  arity(a, 1, 1, "F");
  const auto nf = twist_normal_form(poly(a.pos[0]));
  return {{"beta", q(nf.beta)}, {"alpha", q(nf.alpha)}, {"r", nf.r}, {"s", nf.s}, {"core", format(nf.core)}};
}

json do_height_growth(const Args& a) {
  arity(a, 4, 4, "F G X0 Y0");
  const QPoly f = poly(a.pos[0]), g = poly(a.pos[1]);
  const std::size_t k = a.k_max.value_or(6);
  orbit_guard(f, k);
  orbit_guard(g, k);
  const auto rep = height_growth_report(f, g, rat(a.pos[2]), rat(a.pos[3]), k);
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"k", r.k}, {"h_f", real_value(r.h_f, a)}, {"h_g", real_value(r.h_g, a)}});
  return {{"rows", rows},
          {"separated_at", opt(rep.separated_at, [](std::size_t v) { return v; })},
          {"dominant", rep.dominant ? json(std::string(1, rep.dominant)) : json(nullptr)},
          {"precision_digits", a.precision}};
}

json do_linear_case(const Args& a) {
  arity(a, 3, 3, "F G X0");
  const QLinear f = linear(a.pos[0]), g = linear(a.pos[1]);
  if (f.slope().is_zero() || g.slope().is_zero()) throw DomainError("linear-case requires nonzero slopes");
  const auto rep = linear_case_analysis(f, g, rat(a.pos[2]), a.n_max.value_or(20));
  return {{"case", rep.case_number},
          {"x_hat", opt(rep.x_hat, [](const Rational& x) { return q(x); })},
          {"y_hat", opt(rep.y_hat, [](const Rational& x) { return q(x); })},
          {"hats_equal", rep.hats_equal},
          {"hits", rep.hits},
          {"case2_divergent", rep.case2_divergent}};
}

Real cutoff_value(const std::string& s) {
  static const std::regex log_form(R"(log\((\d+)\))");
  std::smatch m;
  if (std::regex_match(s, m, log_form)) return log_of(BigInt(m[1].str()));
  static const std::regex decimal(R"(\d+(\.\d*)?)");
  if (!std::regex_match(s, decimal)) throw UsageError("cutoff must be a decimal or log(N), got '" + s + "'");
  return Real(s);
}

json do_silverman(const Args& a) {
  if (a.pos.size() < 4) throw UsageError("usage: silverman F X0 CUTOFF C1 [C2 ...]");
  std::vector<Rational> sample;
  for (std::size_t i = 3; i < a.pos.size(); ++i) sample.push_back(rat(a.pos[i]));
  const auto rep = prop_silverman_probe(ffpoly(a.pos[0]), ratfunc(a.pos[1]), cutoff_value(a.pos[2]), sample);
  json pts = json::array();
  for (const auto& pt : rep.points)
    pts.push_back({{"alpha", q(pt.alpha)},
                   {"height", real_value(pt.height, a)},
                   {"probed", pt.probed},
                   {"verdict", opt(pt.verdict, [](Preperiodicity v) { return verdict_name(v); })}});
  json ce = json::array();
  for (const auto& c : rep.counterexamples) ce.push_back(q(c));
  return {{"applicable", rep.applicable},
          {"note", rep.note},
          {"points", pts},
          {"counterexamples", ce},
          {"precision_digits", a.precision}};
}

struct Verb {
  const char* name;
  json (*handler)(const Args&);
  const char* headline;  // key printed bare in text mode, or nullptr
};

const std::vector<Verb>& table() {
  static const std::vector<Verb> t{
      {"iterate", do_iterate, "result"},
      {"compose", do_compose, "result"},
      {"split", do_split, nullptr},
      {"commute", do_commute, nullptr},
      {"linearprop", do_linearprop, nullptr},
      {"common-iterate", do_common_iterate, nullptr},
      {"dickson", do_dickson, "result"},
      {"standard-pair", do_standard_pair, nullptr},
      {"bt-search", do_bt_search, nullptr},
      {"orbit", do_orbit, nullptr},
      {"intersect", do_intersect, nullptr},
      {"diagonal", do_diagonal, nullptr},
      {"line-periodic", do_line_periodic, nullptr},
      {"height", do_height, "height"},
      {"canonical-height", do_canonical_height, nullptr},
      {"preperiodic", do_preperiodic, "preperiodic"},
      {"specialize", do_specialize, "result"},
      {"isotrivial", do_isotrivial, nullptr},
      {"survey", do_survey, nullptr},
      {"reduction", do_reduction, nullptr},
      {"iterate-exponent", do_iterate_exponent, nullptr},
      {"twist", do_twist, nullptr},
      {"height-growth", do_height_growth, nullptr},
      {"linear-case", do_linear_case, nullptr},
      {"silverman", do_silverman, nullptr},
  };
  return t;
}

const Verb* find_verb(const std::string& name) {
  for (const auto& v : table())
    if (name == v.name) return &v;
  return nullptr;
}

std::string scalar(const json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) s += (it == v.begin() ? "" : ", ") + it.key() + " = " + scalar(it.value());
    return s;
  }
  return v.dump();
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& v : table()) out.emplace_back(v.name);
    return out;
  }();
  return names;
}

std::string render_text(const std::string& verb, const json& result) {
  const Verb* v = find_verb(verb);
  const std::string headline = v && v->headline ? v->headline : "";
  std::ostringstream os;
  for (auto it = result.begin(); it != result.end(); ++it) {
    const json& val = it.value();
    if (it.key() == headline) {
      os << scalar(val) << '\n';
    } else if (val.is_array() && !val.empty() && val.front().is_object()) {
      os << it.key() << ":\n";
      for (const auto& e : val) os << "  " << scalar(e) << '\n';
    } else if (val.is_object()) {
      os << it.key() << ": " << scalar(val) << '\n';
    } else {
      os << it.key() << " = " << scalar(val) << '\n';
    }
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  // Split off the "--" options first: polynomials such as "-x^3-x" must
  // stay positional, and CLI11 would read them as short flags.
  std::vector<std::string> options, positional;
  static const std::vector<std::string> valued{"--k-max", "--n-max", "--precision"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) == 0 && tok.size() > 2) {
      options.push_back(tok);
      if (std::find(valued.begin(), valued.end(), tok) != valued.end() && i + 1 < args.size())
        options.push_back(args[++i]);
    } else {
      positional.push_back(tok);
    }
  }

  CLI::App app{"polynomial dynamics toolkit"};
  app.set_help_flag();
  bool json_mode = false, help = false;
  std::optional<std::size_t> k_max, n_max;
  unsigned precision = height_output_digits;
  app.add_flag("--json", json_mode);
  app.add_flag("--help", help);
  app.add_option("--k-max", k_max);
  app.add_option("--n-max", n_max);
  app.add_option("--precision", precision)->check(CLI::Range(1u, height_output_digits));
  try {
    std::vector<std::string> reversed(options.rbegin(), options.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (help || positional.empty()) {
    std::ostream& os = help ? out : err;
    os << "usage: polydyn <verb> <args...> [--json] [--k-max N] [--n-max N] [--precision D]\nverbs:";
    for (const auto& v : verbs()) os << ' ' << v;
    os << '\n';
    return help ? exit_ok : exit_usage;
  }

  Args a;
  a.verb = positional.front();
  a.pos.assign(positional.begin() + 1, positional.end());
  a.k_max = k_max;
  a.n_max = n_max;
  a.precision = precision;
  const Verb* verb = find_verb(a.verb);
  if (!verb) {
    err << "error: unknown verb '" << a.verb << "'\n";
    return exit_usage;
  }
  try {
    const json result = verb->handler(a);
    if (json_mode) out << result.dump(2) << '\n';
    else out << render_text(a.verb, result);
    return exit_ok;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
}

}  // namespace polydyn::cli
