#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace polydyn::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

/// `args` excludes the program name:  <verb> <args...> [--json] [--k-max N]
/// [--n-max N] [--precision D].  Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The text form of a verb's JSON result.  Text mode prints exactly this.
std::string render_text(const std::string& verb, const nlohmann::ordered_json& result);

/// Verbs in help order.
const std::vector<std::string>& verbs();

}  // namespace polydyn::cli
