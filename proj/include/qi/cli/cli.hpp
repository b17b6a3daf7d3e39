#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace qi::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetRefused = 3;
inline constexpr int kFixtureFailure = 4;

/// Runs one command line (without the program name). The rendered result goes to
/// out, diagnostics to err. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs every fixture of a fixture file; the report is written to out.
/// Returns kFixtureFailure if any fixture fails, kInputError if the file is missing
/// or malformed.
int run_fixtures(const std::string& path, std::ostream& out, std::ostream& err);

/// Subset comparison used by the fixture runner: every key of expected must match,
/// arrays element-wise (expected may be a prefix when prefix is set), and a JSON
/// number equals a decimal string with the same value.
bool matches(const nlohmann::json& expected, const nlohmann::json& actual, bool prefix, std::string& diff, const std::string& path = "$");

}  // namespace qi::cli
