#include <sstream>

#include <gtest/gtest.h>

#include "polydyn/cli.hpp"

using polydyn::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SpecExamples) {
  EXPECT_EQ(call({"common-iterate", "x^3+x", "-x^3-x"}).out, "n = 2\n");
  EXPECT_EQ(call({"common-iterate", "x^3+x", "-x^3-x", "--json"}).out, "{\n  \"n\": 2\n}\n");
  EXPECT_EQ(call({"dickson", "3", "1"}).out, "x^3 - 3*x\n");
  const auto pre = call({"preperiodic", "x^2-1", "0"});
  EXPECT_EQ(pre.code, 0);
  EXPECT_EQ(pre.out.substr(0, pre.out.find('\n')), "true");
}

TEST(Cli, LeadingMinusStaysPositional) {
  const auto r = call({"compose", "-x^2", "-x+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-x^2 + 2*x - 1\n");
}

TEST(Cli, OptionsWithEqualsAndSeparateValues) {
  EXPECT_EQ(call({"orbit", "x+1", "0", "--n-max=3"}).out, "points = [0, 1, 2, 3]\n");
  EXPECT_EQ(call({"orbit", "x+1", "0", "--n-max", "2"}).out, "points = [0, 1, 2]\n");
  EXPECT_EQ(call({"--json", "orbit", "x+1", "0", "--n-max", "1"}).out, "{\n  \"points\": [\n    \"0\",\n    \"1\"\n  ]\n}\n");
}

TEST(Cli, PrecisionControlsDigits) {
  EXPECT_EQ(call({"height", "2", "--precision", "5"}).out, "0.69315\nprecision_digits = 5\n");
  EXPECT_EQ(call({"height", "2", "--precision", "0"}).code, 2);
  EXPECT_EQ(call({"height", "2", "--precision", "51"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nope"}).code, 2);
  EXPECT_EQ(call({"dickson", "3"}).code, 2);
  EXPECT_EQ(call({"dickson", "x", "1"}).code, 2);
  EXPECT_EQ(call({"iterate", "x^2+", "2"}).code, 2);
  EXPECT_EQ(call({"orbit", "x", "0", "--bogus"}).code, 2);
  EXPECT_EQ(call({"orbit", "x", "0", "--n-max", "many"}).code, 2);
  EXPECT_EQ(call({"canonical-height", "x+1", "2"}).code, 1);
  EXPECT_EQ(call({"line-periodic", "x^2", "x^2", "0", "1"}).code, 1);
  EXPECT_EQ(call({"linearprop", "x^3", "x^2"}).code, 1);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, DiagnosticsAreOneLine) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"nope"}, {"iterate", "x^2+", "2"}, {"canonical-height", "x+1", "2"}, {"split", "x^4", "3"}}) {
    const auto r = call(args);
    EXPECT_NE(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    ASSERT_FALSE(r.err.empty());
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
  }
}

TEST(Cli, DomainMessagesNameThePrecondition) {
  EXPECT_NE(call({"canonical-height", "x+1", "2"}).err.find("deg(f) >= 2"), std::string::npos);
  EXPECT_NE(call({"line-periodic", "x^2", "x^2", "0", "1"}).err.find("alpha != 0"), std::string::npos);
}

TEST(Cli, GuardsAgainstRunawaySizes) {
  EXPECT_EQ(call({"orbit", "x^2+1", "1", "--n-max", "40"}).code, 1);
  EXPECT_EQ(call({"iterate", "x^3", "20"}).code, 1);
  EXPECT_EQ(call({"orbit", "x+1", "0", "--n-max", "40"}).code, 0);
}

TEST(Cli, EveryVerbIsListed) {
  const auto help = call({"--help"}).out;
  for (const auto& v : polydyn::cli::verbs()) EXPECT_NE(help.find(" " + v), std::string::npos) << v;
}
