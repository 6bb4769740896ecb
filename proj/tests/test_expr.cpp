#include <gtest/gtest.h>

#include "polydyn/error.hpp"
#include "support.hpp"

using namespace polydyn;
using namespace polydyn::testing;

TEST(Parse, Examples) {
  EXPECT_EQ(P("x^3 + x"), QPoly(std::vector<Rational>{0, 1, 0, 1}));
  EXPECT_EQ(P("-3/2*x^2 + 1"), QPoly(std::vector<Rational>{1, 0, Q("-3/2")}));
  const FFPoly f = FF("(t+1)*x^2 - t");
  ASSERT_EQ(f.deg(), 2U);
  EXPECT_EQ(f.coeff(2), T("t+1"));
  EXPECT_EQ(f.coeff(1), RatFunc());
  EXPECT_EQ(f.coeff(0), -RatFunc::t());
}

TEST(Parse, WhitespaceAndPrecedence) {
  EXPECT_EQ(P("  2 * x ^ 2^2 "), P("2*x^4"));
  EXPECT_EQ(P("(x+1)^2"), P("x^2+2*x+1"));
  EXPECT_EQ(P("-x^2"), P("0 - x^2"));
  EXPECT_EQ(P("-x + 1"), P("1 - x"));
  EXPECT_THROW(P("x - -1"), ParseError);
  EXPECT_EQ(P("x*(x-1)/2"), P("1/2*x^2 - 1/2*x"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("x^"), ParseError);
  EXPECT_THROW(P("x +* 2"), ParseError);
  EXPECT_THROW(P("(x+1"), ParseError);
  EXPECT_THROW(P("x y"), ParseError);
  EXPECT_THROW(P("1/0"), DomainError);
  EXPECT_THROW(P("1/x"), ParseError);
  try {
    P("x^2 + t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("variable t"), std::string::npos);
    EXPECT_EQ(e.position(), 6U);
  }
  try {
    P("x + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
}

TEST(Format, Examples) {
  EXPECT_EQ(format(P("x^3+x")), "x^3 + x");
  EXPECT_EQ(format(QPoly()), "0");
  EXPECT_EQ(format(P("1/2*x^2")), "1/2*x^2");
  EXPECT_EQ(format(P("x^3 - 3*x")), "x^3 - 3*x");
  EXPECT_EQ(format(P("-x^2 - 1")), "-x^2 - 1");
  EXPECT_EQ(format(P("-7/3")), "-7/3");
  EXPECT_EQ(format(FF("(t+1)*x^2 - t")), "(t + 1)*x^2 - t");
  EXPECT_EQ(format(FF("x - t - 1")), "x - t - 1");
  EXPECT_EQ(format(FF("x^2/t + 1/(t-1)")), "(1/t)*x^2 + 1/(t - 1)");
}

TEST(Format, ParseRoundTripQ) {
  Gen g(21);
  for (int i = 0; i < 300; ++i) {
    const QPoly f = g.poly(static_cast<std::size_t>(g.integer(0, 6)), 20, 7);
    EXPECT_EQ(P(format(f)), f) << format(f);
  }
}

TEST(Format, ParseRoundTripQt) {
  Gen g(22);
  for (int i = 0; i < 200; ++i) {
    const FFPoly f = g.ffpoly(static_cast<std::size_t>(g.integer(0, 3)));
    EXPECT_EQ(FF(format(f)), f) << format(f);
  }
}

TEST(Format, RatFuncRoundTrip) {
  Gen g(23);
  for (int i = 0; i < 200; ++i) {
    const RatFunc r = g.ratfunc();
    EXPECT_EQ(T(format_ratfunc(r)), r) << format_ratfunc(r);
  }
}
