#pragma once

#include <string>
#include <string_view>

#include "polydyn/poly.hpp"
#include "polydyn/ratfunc.hpp"
#include "polydyn/rational.hpp"

// Text form of polynomials.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ('^' uint)*
//   primary:= uint | 'x' | 't' | '(' expr ')'
//
// 'x' is the polynomial variable and 't' the function-field parameter.
// Division is allowed only by nonzero x-free subexpressions, so "3/2",
// "x^2/4" and "1/(t-1)*x^2" are all accepted.  Whitespace is ignored.

namespace polydyn {

/// Polynomial over Q; any use of 't' is a ParseError.
Poly<Rational> parse_poly(std::string_view text);
/// Polynomial over Q(t).
FFPoly parse_ffpoly(std::string_view text);
/// A rational constant such as "-3/2".
Rational parse_rational(std::string_view text);
/// An x-free element of Q(t) such as "t^2/(t+1)".
RatFunc parse_ratfunc(std::string_view text);

/// Canonical text: descending exponents, explicit signs, reduced rationals.
std::string format(const Poly<Rational>& f, char var = 'x');
std::string format(const FFPoly& f);
std::string format(const LinearPoly<Rational>& l);
std::string format_ratfunc(const RatFunc& r);

}  // namespace polydyn
