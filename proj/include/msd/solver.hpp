#pragma once

#include <optional>
#include <vector>

#include "msd/direction.hpp"
#include "msd/objective.hpp"

namespace msd {

struct SolverConfig {
  double beta = 0.5;
  double sigma = 0.0;
  double eps_critical = 1e-8;
  int max_iter = 10'000;
  int max_j = 60;
  SubproblemConfig subproblem{};

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// State at iterate k. Records that took a step have j >= 0 and satisfy
/// x_{k+1} == x_k + t * v bitwise; the terminal record has t == 0, j == -1.
struct IterationRecord {
  int k = 0;
  Vector x;
  Vector fx;
  Vector v;
  double norm_v = 0.0;  ///< ||v||, kept separately so replayed trajectories agree bitwise
  double t = 0.0;
  int j = -1;
  double alpha_upper = 0.0;
  double alpha_lower = 0.0;
  bool sigma_certified = false;
  int inner_iterations = 0;

  bool took_step() const { return j >= 0; }
};

enum class Termination { critical_point, max_iter, linesearch_failure, subproblem_failure };

const char* to_string(Termination t);
std::optional<Termination> termination_from_string(const std::string& s);

struct RunReport {
  std::vector<IterationRecord> records;
  Termination termination = Termination::max_iter;
  Vector final_x;
  double final_alpha = 0.0;
  long total_inner_iterations = 0;

  /// Number of accepted steps.
  int iterations() const;
};

struct CriticalityCheck {
  bool critical = false;
  double alpha = 0.0;
  bool subproblem_ok = true;
  DirectionResult direction;
};

/// Criticality via the optimal value: x is declared critical iff the exact
/// subproblem gives alpha_upper >= -eps_critical.
CriticalityCheck is_critical(const Matrix& jac, const SolverConfig& cfg);

/// Inexact multiobjective steepest descent with the vector Armijo rule.
/// Deterministic: equal inputs produce bitwise-equal reports.
RunReport run(const MultiObjective& problem, const Vector& x0, const SolverConfig& cfg);

}  // namespace msd
