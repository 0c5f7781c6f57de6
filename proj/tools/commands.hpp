#pragma once

// Subcommands of the eulerian-roots tool. Each writes its primary output to
// `out`, diagnostics to `err`, and returns the process exit code.

#include "eulerian/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eulerpoly::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

enum class Format { csv, pretty };

struct RunConfig {
  std::string command;
  std::vector<unsigned> n_values;
  unsigned p_max = 10;
  std::string tol = "1e-30";
  std::string output_path;  // empty = stdout
  Format format = Format::csv;
};

/// numbers eulerian|stirling2|norlund
struct NumbersArgs {
  std::string kind;
  std::optional<long> n;
  std::optional<long> k;
  std::optional<long> p;
  std::optional<long> p_max;
};
int cmd_numbers(const NumbersArgs& args, Format format, std::ostream& out, std::ostream& err);

int cmd_roots(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::string suite;  // theorem2, lemma-st-n, egf, eulerian-stirling, symmetry
  unsigned n_max = 20;
  unsigned order = 30;
};

struct VerifyOutcome {
  bool passed = true;
  std::size_t instances = 0;
  std::string first_failure;  // empty when passed
};
/// Runs one suite without printing; throws std::invalid_argument for an
/// unknown suite name.
VerifyOutcome run_verify_suite(const VerifyArgs& args);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct Grid {
  double t_min = 1e-3;
  double t_max = 1e3;
  std::size_t points = 601;
};
int cmd_dist(const Grid& grid, std::ostream& out, std::ostream& err);

/// CSV t,cdf_limit,cdf_n<N>... with one empirical CDF column per n. The KS
/// distance of each column to the limit CDF goes to err.
int cmd_figure(const RunConfig& cfg, const Grid& grid, std::ostream& out, std::ostream& err);

/// Parses "10,100" into {10, 100}; throws std::invalid_argument.
std::vector<unsigned> parse_n_list(const std::string& text);

/// Parses a --tol value into a positive exact rational; throws
/// std::invalid_argument.
Rational parse_tolerance(const std::string& text);

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulerpoly::cli
