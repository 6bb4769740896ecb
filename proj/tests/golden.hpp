#pragma once

// Golden corpus loader shared by the golden suite and the acceptance gate.
// A case is NAME.cmd (one argument per line) with expected NAME.txt,
// NAME.json, and for failures NAME.exit plus NAME.err.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polydyn/cli.hpp"

#ifndef POLYDYN_GOLDEN_DIR
#error "POLYDYN_GOLDEN_DIR must point at tests/golden"
#endif

namespace polydyn::testing {

inline constexpr const char* core_verbs[] = {
    "iterate",  "compose",   "split",    "commute",       "linearprop",       "common-iterate", "dickson",
    "standard-pair", "bt-search", "orbit", "intersect", "diagonal", "line-periodic", "height",
    "canonical-height", "preperiodic", "specialize", "isotrivial", "survey"};

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  std::optional<std::string> text;
  std::optional<std::string> json;
  std::optional<std::string> err;
  int exit_code = 0;
};

inline std::optional<std::string> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<GoldenCase> load_golden_cases() {
  namespace fs = std::filesystem;
  std::vector<GoldenCase> out;
  for (const auto& entry : fs::directory_iterator(POLYDYN_GOLDEN_DIR)) {
    if (entry.path().extension() != ".cmd") continue;
    GoldenCase c;
    c.name = entry.path().stem().string();
    std::istringstream lines(*slurp(entry.path()));
    for (std::string line; std::getline(lines, line);) c.args.push_back(line);
    const fs::path base = entry.path().parent_path() / c.name;
    c.text = slurp(base.string() + ".txt");
    c.json = slurp(base.string() + ".json");
    c.err = slurp(base.string() + ".err");
    if (auto code = slurp(base.string() + ".exit")) c.exit_code = std::stoi(*code);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline RunResult run_case(const GoldenCase& c, bool json) {
  std::vector<std::string> args = c.args;
  if (json) args.emplace_back("--json");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace polydyn::testing
