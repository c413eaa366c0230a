#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "suq2/report.hpp"

/// Command-line front end: configuration, dispatch and output rendering.
namespace suq2::cli {

enum class OutputFormat { json, csv, text };

struct RunConfig {
  double q = 0.5;
  /// Truncation level; commands with their own default use it when unset.
  std::optional<int> twolmax;
  double tolerance = 1e-10;
  double decay_threshold = 1e-6;
  OutputFormat output = OutputFormat::json;
  std::string out_file;
  std::uint64_t seed = 42;

  // Per-command parameters.
  int degree = 4;
  std::string element;
  std::string generator;
  int kmin = -4, kmax = 4, lmin = -4, lmax = 4;
  int amin = -5, amax = 5;
  std::vector<double> qs = {0.3, 0.5, 0.9};
  int mmax = 4;
  std::vector<int> cutoffs = {4, 8, 12, 16, 20};
};

inline constexpr int kDefaultTwolmax = 20;
inline constexpr int kDefaultDecayTwolmax = 26;

/// Throws QOutOfRange or CutoffTooSmall (both mean exit status 2).
void validate(const RunConfig& cfg);

const std::vector<std::string>& commands();

struct Outcome {
  Report report;
  /// Table output for commands that have one (index-table).
  std::optional<std::string> csv;
};

/// Runs one subcommand. Library errors propagate.
Outcome run(const std::string& command, const RunConfig& cfg);

/// Renders the outcome in the configured format, newline-terminated.
std::string render(const Outcome& outcome, OutputFormat format);

/// Full CLI: parse, validate, run, write. Returns the process exit status:
/// 0 when every check passes, 1 on a failed check, 2 on invalid configuration.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace suq2::cli
