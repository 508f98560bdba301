#include "msd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace msd::oracle {

GridSpec default_grid(int m) {
  if (m <= 2) return {1e-3, 2};
  if (m == 3) return {1e-2, 2};
  return {2e-2, 2};
}

namespace {

struct GridSearch {
  const Matrix& jac;
  Vector best_w;
  double best_value = std::numeric_limits<double>::infinity();
  long evaluations = 0;

  void consider(const Vector& w) {
    ++evaluations;
    const double value = 0.5 * (jac.transpose() * w).squaredNorm();
    if (value < best_value) {
      best_value = value;
      best_w = w;
    }
  }
};

// Every w with w_i = k_i / steps, k_i >= 0, sum k_i = steps.
void enumerate_lattice(GridSearch& search, int m, int steps) {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  Vector w(m);
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == m - 1) {
      counts[static_cast<std::size_t>(index)] = remaining;
      for (int i = 0; i < m; ++i) {
        w[i] = static_cast<double>(counts[static_cast<std::size_t>(i)]) / steps;
      }
      search.consider(w);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[static_cast<std::size_t>(index)] = c;
      self(self, index + 1, remaining - c);
    }
  };
  recurse(recurse, 0, steps);
}

// Offsets in [-10, 10]^(m-1) of the free coordinates around `center`, the
// last coordinate absorbing the remainder. Points leaving the simplex are
// dropped.
void local_window(GridSearch& search, const Vector& center, double step) {
  const int m = static_cast<int>(center.size());
  const int free = m - 1;
  std::vector<int> offset(static_cast<std::size_t>(free), -10);
  Vector w(m);
  while (true) {
    double head = 0.0;
    bool feasible = true;
    for (int i = 0; i < free; ++i) {
      w[i] = center[i] + step * offset[static_cast<std::size_t>(i)];
      if (w[i] < -1e-15) feasible = false;
      w[i] = std::max(w[i], 0.0);
      head += w[i];
    }
    w[m - 1] = 1.0 - head;
    if (w[m - 1] < -1e-15) feasible = false;
    w[m - 1] = std::max(w[m - 1], 0.0);
    if (feasible) search.consider(w);

    int i = 0;
    while (i < free && offset[static_cast<std::size_t>(i)] == 10) {
      offset[static_cast<std::size_t>(i)] = -10;
      ++i;
    }
    if (i == free) break;
    ++offset[static_cast<std::size_t>(i)];
  }
}

}  // namespace

OracleDirection brute_force_direction(const Matrix& jac, const GridSpec& spec) {
  const int m = static_cast<int>(jac.rows());
  if (m < 1 || m > 4) {
    throw std::invalid_argument("brute_force_direction: requires 1 <= m <= 4");
  }
  if (!(spec.resolution > 0.0) || spec.resolution > 1.0) {
    throw std::invalid_argument("brute_force_direction: resolution must lie in (0, 1]");
  }
  GridSearch search{jac, Vector(), std::numeric_limits<double>::infinity(), 0};
  if (m == 1) {
    search.consider(Vector::Ones(1));
  } else {
    const int steps = static_cast<int>(std::lround(1.0 / spec.resolution));
    enumerate_lattice(search, m, steps);
    double step = 1.0 / steps;
    for (int round = 0; round < spec.refinement_rounds; ++round) {
      step /= 10.0;
      // Recenter until the incumbent is the best point of its own window.
      for (int pass = 0; pass < 100; ++pass) {
        const Vector center = search.best_w;
        local_window(search, center, step);
        if (search.best_w == center) break;
      }
    }
  }
  OracleDirection out;
  out.w = search.best_w;
  out.v = -(jac.transpose() * out.w);
  out.alpha = -0.5 * out.v.squaredNorm();
  out.alpha_primal = (jac * out.v).maxCoeff() + 0.5 * out.v.squaredNorm();
  out.evaluations = search.evaluations;
  return out;
}

OracleDirection brute_force_direction(const Matrix& jac) {
  return brute_force_direction(jac, default_grid(static_cast<int>(jac.rows())));
}

Matrix finite_diff_jacobian(const MultiObjective& problem, const Vector& x, double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("finite_diff_jacobian: h must be positive");
  }
  Matrix jac(problem.m(), problem.n());
  for (int j = 0; j < problem.n(); ++j) {
    Vector forward = x;
    Vector backward = x;
    forward[j] += h;
    backward[j] -= h;
    jac.col(j) = (problem.evaluate(forward) - problem.evaluate(backward)) / (2.0 * h);
  }
  return jac;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(seed + trial * 0x9E3779B97F4A7C15ULL)) {}

double SampleStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

Vector SampleStream::uniform_vector(int n, const Box& box) {
  Vector x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = uniform(box.lower, box.upper);
  }
  return x;
}

namespace {

void record(ViolationReport& rep, int trial, double excess) {
  ++rep.violations;
  rep.worst_excess = std::max(rep.worst_excess, excess);
  if (!rep.first_violation) rep.first_violation = trial;
}

}  // namespace

double quasiconvex_excess(const MultiObjective& problem, const Vector& x, const Vector& y,
                          double t) {
  const Vector mid = (1.0 - t) * x + t * y;
  const Vector bound = problem.evaluate(x).cwiseMax(problem.evaluate(y));
  return (problem.evaluate(mid) - bound).maxCoeff();
}

ViolationReport sample_quasiconvex(const MultiObjective& problem, int trials, std::uint64_t seed,
                                   const Box& box) {
  if (trials < 1) throw std::invalid_argument("sample_quasiconvex: trials must be >= 1");
  ViolationReport rep;
  for (int i = 0; i < trials; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    const Vector x = rng.uniform_vector(problem.n(), box);
    const Vector y = rng.uniform_vector(problem.n(), box);
    const double t = rng.uniform();
    ++rep.trials;
    ++rep.applicable;
    const double excess = quasiconvex_excess(problem, x, y, t);
    if (excess > 1e-10) record(rep, i, excess);
  }
  return rep;
}

ViolationReport check_gradient_characterization(const MultiObjective& problem, int trials,
                                                std::uint64_t seed, const Box& box) {
  if (trials < 1) throw std::invalid_argument("check_gradient_characterization: trials >= 1");
  ViolationReport rep;
  for (int i = 0; i < trials; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    const Vector x = rng.uniform_vector(problem.n(), box);
    const Vector y = rng.uniform_vector(problem.n(), box);
    ++rep.trials;
    if (!strictly_dominates(problem.evaluate(y), problem.evaluate(x))) continue;
    ++rep.applicable;
    const double excess = (problem.jacobian(x) * (y - x)).maxCoeff();
    if (excess > 1e-10) record(rep, i, excess);
  }
  return rep;
}

ViolationReport check_pseudoconvex(const MultiObjective& problem, int trials, std::uint64_t seed,
                                   const Box& box) {
  if (trials < 1) throw std::invalid_argument("check_pseudoconvex: trials must be >= 1");
  ViolationReport rep;
  for (int i = 0; i < trials; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    const Vector x = rng.uniform_vector(problem.n(), box);
    const Vector y = rng.uniform_vector(problem.n(), box);
    ++rep.trials;
    const Vector slope = problem.jacobian(x) * (y - x);
    if ((slope.array() < 0.0).all()) continue;
    ++rep.applicable;
    const Vector gain = problem.evaluate(x) - problem.evaluate(y);
    const double margin = gain.minCoeff();
    if (margin > 1e-10) record(rep, i, margin);
  }
  return rep;
}

bool check_weak_pareto_local(const MultiObjective& problem, const Vector& x_star, double radius,
                             int trials, std::uint64_t seed) {
  if (trials < 1 || !(radius > 0.0)) {
    throw std::invalid_argument("check_weak_pareto_local: need trials >= 1 and radius > 0");
  }
  const Vector f_star = problem.evaluate(x_star);
  const int n = problem.n();
  const Box unit{-1.0, 1.0};
  for (int i = 0; i < trials; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    // Rejection sampling from the enclosing cube keeps the ball uniform.
    Vector offset = rng.uniform_vector(n, unit);
    while (offset.squaredNorm() > 1.0) offset = rng.uniform_vector(n, unit);
    const Vector f = problem.evaluate(x_star + radius * offset);
    if (((f_star - f).array() > 1e-10).all()) return false;
  }
  return true;
}

bool alternative_sigma_condition(const Matrix& jac, const Vector& v, double sigma) {
  return (jac * v).maxCoeff() <= -(1.0 - 0.5 * sigma) * v.squaredNorm();
}

}  // namespace msd::oracle
