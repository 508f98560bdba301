#pragma once

#include "msd/types.hpp"

namespace msd {

struct SubproblemConfig {
  double tol_gap = 1e-10;      ///< relative duality-gap tolerance
  int max_inner = 10'000;      ///< projected-gradient iteration cap
  double eps_critical = 1e-12; ///< ||v|| and |alpha_upper| threshold for criticality

  void validate() const;
};

enum class SubproblemStatus {
  converged,        ///< relative duality gap below tol_gap
  sigma_certified,  ///< early exit on alpha_upper <= (1 - sigma) * alpha_lower
  critical,         ///< v ~ 0: the point is Pareto critical
  max_inner,        ///< iteration cap hit, best iterate returned uncertified
};

const char* to_string(SubproblemStatus s);

/// Output of the direction subproblem
///
///   min_v  max_i <grad f_i(x), v> + 1/2 ||v||^2,
///
/// solved through its dual  min_{w in simplex} 1/2 ||J^T w||^2  with v = -J^T w.
/// `v` is always built from `weights`, so every result is scalarization
/// compatible and alpha_lower <= alpha(x) <= alpha_upper.
struct DirectionResult {
  Vector v;
  Vector weights;
  double alpha_lower = 0.0;  ///< dual value -1/2 ||J^T w||^2
  double alpha_upper = 0.0;  ///< primal value max_i (J v)_i + 1/2 ||v||^2
  bool sigma_certified = false;
  bool critical = false;
  int inner_iterations = 0;
  SubproblemStatus status = SubproblemStatus::max_inner;
};

/// max_i (J v)_i + 1/2 ||v||^2
double primal_value(const Matrix& jac, const Vector& v);

/// Euclidean projection onto the unit simplex {w >= 0, sum w = 1}.
Vector project_simplex(const Vector& y);

/// Solve the subproblem to the relative gap tolerance.
DirectionResult solve_exact(const Matrix& jac, const SubproblemConfig& cfg = {});

/// Stop the dual iteration as soon as the current candidate provably is a
/// sigma-approximate steepest descent direction. sigma == 0 behaves exactly
/// like solve_exact().
DirectionResult solve_sigma_approx(const Matrix& jac, double sigma,
                                   const SubproblemConfig& cfg = {});

/// True iff max_i (J v)_i + 1/2 ||v||^2 <= (1 - sigma) * alpha_exact, with a
/// slack of 1e-12 * max(1, |alpha_exact|).
bool check_sigma_certificate(const Matrix& jac, const Vector& v, double alpha_exact,
                             double sigma);

}  // namespace msd
