#pragma once

#include <limits>
#include <optional>
#include <string>

#include "msd/objective.hpp"
#include "msd/solver.hpp"

namespace msd {

/// max_i y_i. Sublinear and monotone with respect to the componentwise order.
double phi(const Vector& y);

enum class CheckStatus { pass, fail, precondition_violation };

const char* to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  /// Largest amount by which the checked inequality was exceeded, before
  /// slack. Non-positive values mean the inequality held with room to spare.
  double worst_violation = -std::numeric_limits<double>::infinity();
  /// Record index where worst_violation occurred, if any pair was checked.
  std::optional<int> worst_index;
  int checked = 0;
  int skipped = 0;

  bool passed() const { return status == CheckStatus::pass; }
};

/// A candidate point x~ for the set U = {x : F(x) <= F(x_k) for all k}.
struct DominatingReference {
  Vector x_tilde;
  double slack = 0.0;
};

/// F(x_{k+1}) <= F(x_k) for every consecutive pair, zero slack.
CheckOutcome check_monotone(const RunReport& report);

/// F(x_k) <= F(x_0) for every record.
CheckOutcome check_level_set(const RunReport& report);

/// Partial sums of t_k^2 ||v_k||^2 are finite and non-decreasing, and the mean
/// of t_k ||v_k||^2 over the last 10% of records is at most 1e-6 times the
/// first value. The terminal record contributes t = 0.
CheckOutcome check_summability(const RunReport& report);

/// ||x_{k+1} - x~||^2 <= ||x_k - x~||^2 + t_k^2 ||v_k||^2 with slack
/// 1e-10 (1 + ||x_k - x~||^2). Returns precondition_violation when x~ is not
/// dominated by every recorded F(x_k) up to ref.slack.
CheckOutcome check_quasi_fejer(const RunReport& report, const MultiObjective& problem,
                               const DominatingReference& ref);

/// Recomputes v(x_k) and alpha(x_k) exactly and checks
/// ||v_k - v(x_k)||^2 <= 2 sigma |alpha(x_k)| + 1e-8 on every record. Records
/// whose exact solve fails are skipped and counted.
CheckOutcome check_proximity(const RunReport& report, const MultiObjective& problem,
                             double sigma, const SubproblemConfig& sub = {});

/// phi(F(x_{k+1})) - phi(F(x_k)) <= beta ((1 - sigma) t_k alpha_k - 1/2 t_k ||v_k||^2)
/// with the recorded alpha_upper and slack 1e-10 (1 + |phi(F(x_k))|).
CheckOutcome check_descent_chain(const RunReport& report, double beta, double sigma);

struct DiagnosticsSummary {
  CheckOutcome monotone;
  CheckOutcome level_set;
  CheckOutcome summability;
  CheckOutcome fejer;
  CheckOutcome descent_chain;
  /// Needs the search directions themselves, which trajectory files do not
  /// carry; absent when summarizing a replayed trajectory.
  std::optional<CheckOutcome> proximity;

  bool all_passed() const;
};

/// Runs every trajectory check. The Fejér reference defaults to the final
/// iterate.
DiagnosticsSummary summarize(const RunReport& report, const MultiObjective& problem,
                             const SolverConfig& cfg,
                             std::optional<DominatingReference> ref = std::nullopt,
                             bool with_proximity = true);

}  // namespace msd
