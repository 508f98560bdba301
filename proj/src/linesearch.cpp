#include "msd/linesearch.hpp"

#include <cmath>

namespace msd {

bool armijo_condition_holds(const Vector& trial_fx, const Vector& fx, const Vector& jv,
                            double beta, double t) {
  if (!all_finite(trial_fx)) {
    return false;
  }
  for (Eigen::Index i = 0; i < fx.size(); ++i) {
    // Difference form: F(x) + beta t Jv can round back to F(x) for tiny t.
    if (!(trial_fx[i] - fx[i] <= beta * t * jv[i])) {
      return false;
    }
  }
  return true;
}

StepResult armijo_step(const MultiObjective& problem, const Vector& x, const Vector& fx,
                       const Vector& v, const Vector& jv, double beta, int max_j) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("armijo_step: beta must lie in (0, 1)");
  }
  if (x.size() != problem.n() || v.size() != problem.n() || fx.size() != problem.m() ||
      jv.size() != problem.m()) {
    throw DimensionError("armijo_step: argument dimensions do not match the problem");
  }
  StepResult res;
  for (int j = 0; j <= max_j; ++j) {
    const double t = std::ldexp(1.0, -j);
    const Vector trial = x + t * v;
    ++res.trial_count;
    if (armijo_condition_holds(problem.evaluate_unchecked(trial), fx, jv, beta, t)) {
      res.t = t;
      res.j = j;
      res.accepted = true;
      return res;
    }
  }
  return res;
}

}  // namespace msd
