#pragma once

#include "msd/objective.hpp"

namespace msd {

struct StepResult {
  double t = 0.0;       ///< accepted step, exactly 2^-j
  int j = -1;           ///< backtracking exponent; -1 when nothing was accepted
  int trial_count = 0;  ///< objective evaluations spent
  bool accepted = false;
};

/// Vector Armijo rule: the largest t = 2^-j, j = 0, 1, ..., max_j with
///
///   F(x + t v) <= F(x) + beta * t * Jv   in every component (zero slack).
///
/// Non-finite trial values count as failures. When no j <= max_j works the
/// result has accepted == false.
StepResult armijo_step(const MultiObjective& problem, const Vector& x, const Vector& fx,
                       const Vector& v, const Vector& jv, double beta, int max_j = 60);

/// The acceptance test of armijo_step() for a single trial step.
bool armijo_condition_holds(const Vector& trial_fx, const Vector& fx, const Vector& jv,
                            double beta, double t);

}  // namespace msd
