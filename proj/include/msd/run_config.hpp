#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msd/objective.hpp"
#include "msd/solver.hpp"

namespace msd {

/// Config parse or validation failure. line/column are 1-based; 0 when the
/// problem is not tied to a position (e.g. a command-line override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& msg, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Flat `key = value` file. Recognized keys:
///
///   problem      builtin name, or `inline` together with f1, f2, ...
///   f<i>         criterion i as an arithmetic expression over x1..xn
///   x0           comma-separated start point (n is its length for inline problems)
///   beta sigma eps_critical max_iter max_j
///   output       path prefix for written files
///   seed         unsigned integer for sampling commands
///   reference    comma-separated x~ for the quasi-Fejér check
///
/// Blank lines and lines starting with '#' are ignored. Unknown or repeated
/// keys are errors.
struct RunConfig {
  std::string problem;
  std::vector<std::string> criteria;
  std::optional<Vector> x0;
  SolverConfig solver;
  std::string output = "run";
  std::uint64_t seed = 0;
  std::optional<Vector> reference;

  static RunConfig parse(std::istream& in);
  static RunConfig parse_file(const std::string& path);

  /// Checks ranges and that the problem can be built; throws ConfigError.
  void validate() const;
};

/// Comma-separated reals; throws ConfigError with the column of the bad entry.
Vector parse_vector(const std::string& text, int line = 0, int column_offset = 0);

/// The problem a config refers to: a builtin, or the inline criteria with
/// finite-difference derivatives.
struct ResolvedProblem {
  std::string name;
  MultiObjective problem;
  Vector x0;
};

ResolvedProblem resolve_problem(const RunConfig& cfg);

}  // namespace msd
