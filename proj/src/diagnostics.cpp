#include "msd/diagnostics.hpp"

#include <cmath>
#include <limits>

namespace msd {

double phi(const Vector& y) {
  if (y.size() == 0) {
    throw DimensionError("phi: empty vector");
  }
  return y.maxCoeff();
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::precondition_violation: return "precondition_violation";
  }
  return "unknown";
}

namespace {

void note(CheckOutcome& out, double violation, int index) {
  ++out.checked;
  if (violation > out.worst_violation) {
    out.worst_violation = violation;
    out.worst_index = index;
  }
}

double step_norm_sq(const IterationRecord& r) {
  return r.took_step() ? r.t * r.t * r.norm_v * r.norm_v : 0.0;
}

double step_length_measure(const IterationRecord& r) {
  return r.took_step() ? r.t * r.norm_v * r.norm_v : 0.0;
}

}  // namespace

CheckOutcome check_monotone(const RunReport& report) {
  CheckOutcome out;
  const auto& recs = report.records;
  for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
    const double violation = (recs[k + 1].fx - recs[k].fx).maxCoeff();
    note(out, violation, static_cast<int>(k));
    if (violation > 0.0) out.status = CheckStatus::fail;
  }
  return out;
}

CheckOutcome check_level_set(const RunReport& report) {
  CheckOutcome out;
  if (report.records.empty()) return out;
  const Vector& f0 = report.records.front().fx;
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const double violation = (report.records[k].fx - f0).maxCoeff();
    note(out, violation, static_cast<int>(k));
    if (violation > 0.0) out.status = CheckStatus::fail;
  }
  return out;
}

CheckOutcome check_summability(const RunReport& report) {
  CheckOutcome out;
  const auto& recs = report.records;
  if (recs.size() < 2) return out;

  double partial = 0.0;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const double next = partial + step_norm_sq(recs[k]);
    if (!std::isfinite(next) || next < partial) {
      out.status = CheckStatus::fail;
      note(out, std::numeric_limits<double>::infinity(), static_cast<int>(k));
      return out;
    }
    partial = next;
  }

  const std::size_t count = recs.size();
  const std::size_t tail = std::max<std::size_t>(1, (count + 9) / 10);
  double tail_sum = 0.0;
  for (std::size_t k = count - tail; k < count; ++k) {
    tail_sum += step_length_measure(recs[k]);
  }
  const double tail_mean = tail_sum / static_cast<double>(tail);
  const double bound = 1e-6 * (step_length_measure(recs.front()) + 1e-300);
  note(out, tail_mean - bound, static_cast<int>(count - tail));
  if (tail_mean > bound) out.status = CheckStatus::fail;
  return out;
}

CheckOutcome check_quasi_fejer(const RunReport& report, const MultiObjective& problem,
                               const DominatingReference& ref) {
  CheckOutcome out;
  const auto& recs = report.records;
  const Vector f_ref = problem.evaluate(ref.x_tilde);
  for (const auto& r : recs) {
    if (!weakly_dominates(f_ref, r.fx + Vector::Constant(r.fx.size(), ref.slack))) {
      out.status = CheckStatus::precondition_violation;
      return out;
    }
  }
  for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
    if (!recs[k].took_step()) continue;
    const double before = (recs[k].x - ref.x_tilde).squaredNorm();
    const double after = (recs[k + 1].x - ref.x_tilde).squaredNorm();
    const double violation = after - before - step_norm_sq(recs[k]);
    note(out, violation, static_cast<int>(k));
    if (violation > 1e-10 * (1.0 + before)) out.status = CheckStatus::fail;
  }
  return out;
}

CheckOutcome check_proximity(const RunReport& report, const MultiObjective& problem,
                             double sigma, const SubproblemConfig& sub) {
  CheckOutcome out;
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const auto& r = report.records[k];
    const DirectionResult exact = solve_exact(problem.jacobian(r.x), sub);
    if (exact.status == SubproblemStatus::max_inner) {
      ++out.skipped;
      continue;
    }
    const double lhs = (r.v - exact.v).squaredNorm();
    const double rhs = 2.0 * sigma * std::abs(exact.alpha_upper);
    note(out, lhs - rhs, static_cast<int>(k));
    if (lhs > rhs + 1e-8) out.status = CheckStatus::fail;
  }
  return out;
}

CheckOutcome check_descent_chain(const RunReport& report, double beta, double sigma) {
  CheckOutcome out;
  const auto& recs = report.records;
  for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
    const auto& r = recs[k];
    if (!r.took_step()) continue;
    const double phi_k = phi(r.fx);
    const double lhs = phi(recs[k + 1].fx) - phi_k;
    const double rhs =
        beta * ((1.0 - sigma) * r.t * r.alpha_upper - 0.5 * r.t * r.norm_v * r.norm_v);
    note(out, lhs - rhs, static_cast<int>(k));
    if (lhs - rhs > 1e-10 * (1.0 + std::abs(phi_k))) out.status = CheckStatus::fail;
  }
  return out;
}

bool DiagnosticsSummary::all_passed() const {
  return monotone.passed() && level_set.passed() && summability.passed() && fejer.passed() &&
         descent_chain.passed() && (!proximity || proximity->passed());
}

DiagnosticsSummary summarize(const RunReport& report, const MultiObjective& problem,
                             const SolverConfig& cfg, std::optional<DominatingReference> ref,
                             bool with_proximity) {
  DiagnosticsSummary s;
  s.monotone = check_monotone(report);
  s.level_set = check_level_set(report);
  s.summability = check_summability(report);
  if (!ref) {
    ref = DominatingReference{report.records.empty() ? report.final_x : report.records.back().x,
                              0.0};
  }
  s.fejer = check_quasi_fejer(report, problem, *ref);
  s.descent_chain = check_descent_chain(report, cfg.beta, cfg.sigma);
  if (with_proximity) {
    s.proximity = check_proximity(report, problem, cfg.sigma, cfg.subproblem);
  }
  return s;
}

}  // namespace msd
