#pragma once

// Brute-force and sampling oracles. None of these share code with the
// production solver paths they are used to validate.

#include <cstdint>
#include <optional>
#include <random>

#include "msd/objective.hpp"

namespace msd::oracle {

struct GridSpec {
  double resolution = 1e-3;
  int refinement_rounds = 2;
};

/// 1e-3 for m <= 2, 1e-2 for m == 3, 2e-2 for m == 4.
GridSpec default_grid(int m);

struct OracleDirection {
  Vector w;
  Vector v;
  double alpha = 0.0;         ///< -1/2 ||J^T w|| ^2 at the best grid point
  double alpha_primal = 0.0;  ///< max_i (J v)_i + 1/2 ||v||^2 at the same point
  long evaluations = 0;
};

/// Exhaustive search of min_{w in simplex} 1/2 ||J^T w||^2 on a lattice of
/// step `resolution`, followed by refinement rounds that shrink the step by 10
/// around the incumbent. alpha is a dual value (alpha <= alpha(x)) and
/// alpha_primal a primal one (alpha(x) <= alpha_primal). Requires m <= 4.
OracleDirection brute_force_direction(const Matrix& jac, const GridSpec& spec);
OracleDirection brute_force_direction(const Matrix& jac);

/// Central differences with a fixed step h.
Matrix finite_diff_jacobian(const MultiObjective& problem, const Vector& x, double h);

/// Sampling box [lower, upper]^n.
struct Box {
  double lower = -10.0;
  double upper = 10.0;
};

/// Seeded sample stream. Trial i of a run draws from std::mt19937_64 seeded
/// with splitmix64(seed + i * 0x9E3779B97F4A7C15), and doubles are taken from
/// the top 53 bits of each output, so a (seed, trial) pair yields the same
/// numbers on every platform.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t trial);
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  Vector uniform_vector(int n, const Box& box);

 private:
  std::mt19937_64 engine_;
};

struct ViolationReport {
  int trials = 0;
  int applicable = 0;  ///< trials whose hypothesis held (all trials for the segment test)
  int violations = 0;
  double worst_excess = 0.0;
  std::optional<int> first_violation;

  bool clean() const { return violations == 0; }
};

/// Excess of H((1-t)x + t y) over max{H(x), H(y)} (largest component).
double quasiconvex_excess(const MultiObjective& problem, const Vector& x, const Vector& y,
                          double t);

/// Segment test of vector quasi-convexity on random (x, y, t); slack 1e-10.
ViolationReport sample_quasiconvex(const MultiObjective& problem, int trials, std::uint64_t seed,
                                   const Box& box = {});

/// H(y) < H(x) strictly  =>  JH(x)(y - x) <= 1e-10 componentwise.
ViolationReport check_gradient_characterization(const MultiObjective& problem, int trials,
                                                std::uint64_t seed, const Box& box = {});

/// JH(x)(y - x) not < 0  =>  H(y) not < H(x); strict domination must exceed
/// 1e-10 to count.
ViolationReport check_pseudoconvex(const MultiObjective& problem, int trials, std::uint64_t seed,
                                   const Box& box = {});

/// Samples the ball of `radius` around x_star; true iff no sample improves
/// every criterion by more than 1e-10. Evidence, not proof.
bool check_weak_pareto_local(const MultiObjective& problem, const Vector& x_star, double radius,
                             int trials, std::uint64_t seed);

/// The sufficient condition max_i <grad f_i, v> <= -(1 - sigma/2) ||v||^2.
bool alternative_sigma_condition(const Matrix& jac, const Vector& v, double sigma);

}  // namespace msd::oracle
