#include "polydyn/expr.hpp"

#include <cctype>
#include <string>

#include "polydyn/error.hpp"

namespace polydyn {

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
public:
  Parser(std::string_view text, bool allow_t) : text_(text), allow_t_(allow_t) {}

  FFPoly parse() {
    FFPoly value = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return value;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  FFPoly expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    FFPoly acc = term();
    if (negate) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      FFPoly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  FFPoly term() {
    FFPoly acc = factor();
    while (peek() == '*' || peek() == '/') {
      const bool divide = text_[pos_] == '/';
      const std::size_t at = pos_;
      ++pos_;
      FFPoly rhs = factor();
      if (!divide) {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.is_constant()) throw ParseError("division by a polynomial in x", at);
      if (rhs.is_zero()) throw ParseError("division by zero", at);
      acc = acc.scaled(rhs.coeff(0).inverse());
    }
    return acc;
  }

  FFPoly factor() {
    FFPoly base = primary();
    while (peek() == '^') {
      ++pos_;
      base = power(base, exponent());
    }
    return base;
  }

  std::size_t exponent() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an unsigned exponent", start);
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) throw ParseError("exponent too large", start);
    return std::stoul(digits);
  }

  FFPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      BigInt value(std::string(text_.substr(start, pos_ - start)));
      return FFPoly::constant(RatFunc(Rational(value)));
    }
    if (c == 'x') {
      ++pos_;
      return FFPoly::x();
    }
    if (c == 't') {
      if (!allow_t_) throw ParseError("variable t is not allowed in a Q-context", pos_);
      ++pos_;
      return FFPoly::constant(RatFunc::t());
    }
    if (c == '(') {
      ++pos_;
      FFPoly inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

std::string monomial_text(char var, std::size_t e) {
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

// Unsigned body of c*var^e for c > 0.
std::string rational_term(const Rational& magnitude, char var, std::size_t e) {
  if (e == 0) return magnitude.to_string();
  if (magnitude.is_one()) return monomial_text(var, e);
  return magnitude.to_string() + "*" + monomial_text(var, e);
}

void append_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

bool single_term(const Poly<Rational>& p) { return p.support().size() == 1; }

}  // namespace

Poly<Rational> parse_poly(std::string_view text) {
  const FFPoly value = Parser(text, false).parse();
  std::vector<Rational> coeffs;
  for (const RatFunc& c : value.coefficients()) coeffs.push_back(*c.as_rational());
  return Poly<Rational>(std::move(coeffs));
}

FFPoly parse_ffpoly(std::string_view text) { return Parser(text, true).parse(); }

Rational parse_rational(std::string_view text) {
  const FFPoly value = Parser(text, false).parse();
  if (!value.is_constant()) throw ParseError("expected a rational number", 0);
  return *value.coeff(0).as_rational();
}

RatFunc parse_ratfunc(std::string_view text) {
  const FFPoly value = Parser(text, true).parse();
  if (!value.is_constant()) throw ParseError("expected an x-free expression in t", 0);
  return value.coeff(0);
}

std::string format(const Poly<Rational>& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    append_term(out, c[i].sign() < 0, rational_term(c[i].abs(), var, i));
  }
  return out;
}

std::string format_ratfunc(const RatFunc& r) {
  const auto& num = r.numerator();
  const auto& den = r.denominator();
  if (den.is_constant()) return format(num, 't');
  std::string n = format(num, 't');
  if (!single_term(num)) n = "(" + n + ")";
  std::string d = format(den, 't');
  if (!single_term(den)) d = "(" + d + ")";
  return n + "/" + d;
}

std::string format(const FFPoly& f) {
  if (f.is_zero()) return "0";
  if (f.is_constant()) return format_ratfunc(f.coeff(0));
  std::string out;
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    const RatFunc& coeff = c[i];
    if (coeff.is_zero()) continue;
    if (auto q = coeff.as_rational()) {
      append_term(out, q->sign() < 0, rational_term(q->abs(), 'x', i));
      continue;
    }
    const auto& num = coeff.numerator();
    if (coeff.denominator().is_constant() && single_term(num)) {
      const bool negative = num.leading().sign() < 0;
      std::string body = format(negative ? -num : num, 't');
      if (i > 0) body += "*" + monomial_text('x', i);
      append_term(out, negative, body);
      continue;
    }
    if (i == 0) {
      const std::string text = format_ratfunc(coeff);
      const bool negative = text.front() == '-';
      append_term(out, negative, negative ? text.substr(1) : text);
      continue;
    }
    append_term(out, false, "(" + format_ratfunc(coeff) + ")*" + monomial_text('x', i));
  }
  return out;
}

std::string format(const LinearPoly<Rational>& l) { return format(l.as_poly()); }

}  // namespace polydyn
