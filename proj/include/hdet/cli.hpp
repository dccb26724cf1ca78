#pragma once

// Subcommands of the hdet tool, separated from argument parsing so they can
// be driven from tests.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hdet::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { ok = 0, usage = 2, numeric = 3, h_invalid = 4 };

/// Bad flag values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct Options {
  std::string command;
  std::vector<unsigned> n;
  std::string alpha = "0";
  std::string beta = "0";
  std::string h = "1";
  std::optional<int> digits;
  std::optional<unsigned> quad_order;
  std::optional<unsigned> cheb_m;
  Format format = Format::json;
  bool heine = false;
  /// Number of worker threads for n-sweeps; 0 means hardware concurrency.
  unsigned jobs = 0;
  /// Original command line, echoed into the report.
  std::vector<std::string> argv;
};

/// "10,20,40" or "a:b:step" (inclusive of b when reached), or a mix of the
/// two separated by commas. Throws UsageError.
std::vector<unsigned> parse_n_list(const std::string& text);

using Row = nlohmann::ordered_json;

struct RunReport {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::ordered_json parameters;
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  /// Set when the run aborted before producing rows.
  std::optional<std::string> error;
  double elapsed_seconds = 0;
  int exit_code = ok;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

RunReport cmd_exact(const Options& opt);
RunReport cmd_compare(const Options& opt);
RunReport cmd_fluid(const Options& opt);
RunReport cmd_density(const Options& opt);
RunReport cmd_heine(const Options& opt);

/// Dispatches on opt.command. Errors that abort the whole run (bad
/// parameters, invalid h) are turned into a report with no rows and the
/// matching exit code.
RunReport run(const Options& opt);

/// Maps an exception to its exit code.
int exit_code_for(const std::exception& e);

}  // namespace hdet::cli
