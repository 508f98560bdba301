#include "msd/solver.hpp"

#include <cmath>
#include <string>

#include "msd/linesearch.hpp"

namespace msd {

void SolverConfig::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("beta must lie in (0, 1)");
  }
  if (!(sigma >= 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("sigma must lie in [0, 1)");
  }
  if (!(eps_critical > 0.0)) {
    throw std::invalid_argument("eps_critical must be positive");
  }
  if (max_iter < 0 || max_j < 0) {
    throw std::invalid_argument("iteration caps must be non-negative");
  }
  subproblem.validate();
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::critical_point: return "critical_point";
    case Termination::max_iter: return "max_iter";
    case Termination::linesearch_failure: return "linesearch_failure";
    case Termination::subproblem_failure: return "subproblem_failure";
  }
  return "unknown";
}

std::optional<Termination> termination_from_string(const std::string& s) {
  for (auto t : {Termination::critical_point, Termination::max_iter,
                 Termination::linesearch_failure, Termination::subproblem_failure}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

int RunReport::iterations() const {
  int steps = 0;
  for (const auto& r : records) {
    steps += r.took_step() ? 1 : 0;
  }
  return steps;
}

CriticalityCheck is_critical(const Matrix& jac, const SolverConfig& cfg) {
  CriticalityCheck out;
  out.direction = solve_exact(jac, cfg.subproblem);
  out.subproblem_ok = out.direction.status != SubproblemStatus::max_inner;
  out.alpha = out.direction.alpha_upper;
  out.critical = out.subproblem_ok &&
                 (out.direction.critical || out.direction.alpha_upper >= -cfg.eps_critical);
  return out;
}

RunReport run(const MultiObjective& problem, const Vector& x0, const SolverConfig& cfg) {
  cfg.validate();
  RunReport report;
  Vector x = x0;
  Vector fx = problem.evaluate(x);

  for (int k = 0;; ++k) {
    const Matrix jac = problem.jacobian(x);

    IterationRecord rec;
    rec.k = k;
    rec.x = x;
    rec.fx = fx;

    // With sigma == 0 the exact solve doubles as the criticality test. With
    // sigma > 0 the dual lower bound certifies criticality instead, since
    // alpha_lower <= alpha(x) <= 0.
    DirectionResult dir;
    bool critical = false;
    double alpha = 0.0;
    if (cfg.sigma == 0.0) {
      CriticalityCheck check = is_critical(jac, cfg);
      dir = std::move(check.direction);
      critical = check.critical;
      alpha = check.alpha;
    } else {
      dir = solve_sigma_approx(jac, cfg.sigma, cfg.subproblem);
      critical = dir.status != SubproblemStatus::max_inner &&
                 (dir.critical || dir.alpha_lower >= -cfg.eps_critical);
      alpha = dir.critical ? dir.alpha_upper : dir.alpha_lower;
    }

    rec.v = dir.v;
    rec.norm_v = dir.v.norm();
    rec.alpha_upper = dir.alpha_upper;
    rec.alpha_lower = dir.alpha_lower;
    rec.sigma_certified = dir.sigma_certified;
    rec.inner_iterations = dir.inner_iterations;
    report.total_inner_iterations += dir.inner_iterations;
    report.final_x = x;
    report.final_alpha = alpha;

    auto finish = [&](Termination why) {
      report.records.push_back(std::move(rec));
      report.termination = why;
      return report;
    };

    if (critical) {
      return finish(Termination::critical_point);
    }
    if (dir.status == SubproblemStatus::max_inner) {
      return finish(Termination::subproblem_failure);
    }
    if (k >= cfg.max_iter) {
      return finish(Termination::max_iter);
    }

    const Vector jv = jac * dir.v;
    const StepResult step = armijo_step(problem, x, fx, dir.v, jv, cfg.beta, cfg.max_j);
    if (!step.accepted) {
      return finish(Termination::linesearch_failure);
    }
    rec.t = step.t;
    rec.j = step.j;
    report.records.push_back(std::move(rec));

    x = x + step.t * dir.v;
    fx = problem.evaluate(x);
  }
}

}  // namespace msd
