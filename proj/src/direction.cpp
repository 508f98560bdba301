#include "msd/direction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <vector>

namespace msd {

void SubproblemConfig::validate() const {
  if (!(tol_gap > 0.0) || max_inner <= 0 || !(eps_critical > 0.0)) {
    throw std::invalid_argument("SubproblemConfig: all parameters must be positive");
  }
}

const char* to_string(SubproblemStatus s) {
  switch (s) {
    case SubproblemStatus::converged: return "converged";
    case SubproblemStatus::sigma_certified: return "sigma_certified";
    case SubproblemStatus::critical: return "critical";
    case SubproblemStatus::max_inner: return "max_inner";
  }
  return "unknown";
}

double primal_value(const Matrix& jac, const Vector& v) {
  if (jac.cols() != v.size()) {
    throw DimensionError("primal_value: direction length does not match jacobian");
  }
  return (jac * v).maxCoeff() + 0.5 * v.squaredNorm();
}

Vector project_simplex(const Vector& y) {
  const auto m = y.size();
  if (m == 0) {
    throw DimensionError("project_simplex: empty vector");
  }
  std::vector<double> sorted(y.data(), y.data() + m);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) {
      tau = candidate;
    }
  }
  Vector w = (y.array() - tau).max(0.0).matrix();
  // Rounding can leave the sum a few ulps away from one.
  const double total = w.sum();
  if (total > 0.0) {
    w /= total;
  }
  return w;
}

namespace {

// Largest eigenvalue of the Gram matrix J J^T by power iteration, bounded
// below by its largest diagonal entry (max_i ||grad f_i||^2).
double lipschitz_estimate(const Matrix& gram) {
  const auto m = gram.rows();
  Vector u(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    u[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i) + 1.0);
  }
  u.normalize();
  double rayleigh = 0.0;
  for (int it = 0; it < 50; ++it) {
    Vector gu = gram * u;
    const double norm = gu.norm();
    if (norm == 0.0) break;
    rayleigh = u.dot(gu);
    u = gu / norm;
  }
  rayleigh = std::max(rayleigh, u.dot(gram * u));
  return std::max(rayleigh, gram.diagonal().maxCoeff());
}

struct Iterate {
  Vector v;
  double lower;
  double upper;
};

Iterate evaluate_iterate(const Matrix& jac, const Vector& w) {
  Iterate it;
  it.v = -(jac.transpose() * w);
  const double half_sq = 0.5 * it.v.squaredNorm();
  it.lower = -half_sq;
  it.upper = (jac * it.v).maxCoeff() + half_sq;
  return it;
}

DirectionResult solve_dual(const Matrix& jac, double sigma, const SubproblemConfig& cfg) {
  cfg.validate();
  if (jac.rows() == 0 || jac.cols() == 0) {
    throw DimensionError("direction subproblem: empty jacobian");
  }
  if (!all_finite(jac)) {
    throw NonFiniteError("direction subproblem: jacobian has non-finite entries");
  }
  const auto m = jac.rows();
  const Matrix gram = jac * jac.transpose();
  double lipschitz = lipschitz_estimate(gram);
  // Rounding in v = -J^T w is bounded by eps * |J|^T w componentwise and
  // reaches the gap through J v, so the gap cannot be resolved below roughly
  // eps * max_i ||grad f_i|| * || |J|^T w ||. Near critical points this
  // dominates the relative tolerance.
  const double row_norm = std::sqrt(gram.diagonal().maxCoeff());
  const Matrix abs_jt = jac.transpose().cwiseAbs();
  auto noise_at = [&](const Vector& weights) {
    return 8.0 * static_cast<double>(m) * std::numeric_limits<double>::epsilon() * row_norm *
           (abs_jt * weights).norm();
  };

  DirectionResult res;
  Vector w = Vector::Constant(m, 1.0 / static_cast<double>(m));
  double dual_obj = 0.5 * (jac.transpose() * w).squaredNorm();

  for (int k = 0;; ++k) {
    const Iterate cur = evaluate_iterate(jac, w);
    res.v = cur.v;
    res.weights = w;
    res.alpha_lower = cur.lower;
    res.alpha_upper = cur.upper;
    res.inner_iterations = k;

    if (cur.v.norm() <= cfg.eps_critical && std::abs(cur.upper) <= cfg.eps_critical) {
      res.status = SubproblemStatus::critical;
      res.critical = true;
      res.sigma_certified = true;
      return res;
    }
    const double gap = cur.upper - cur.lower;
    const double noise = noise_at(w);
    if (gap <= std::max(cfg.tol_gap * std::max(std::abs(cur.lower), 1e-300), noise)) {
      res.status = SubproblemStatus::converged;
      res.sigma_certified = true;
      return res;
    }
    if (sigma > 0.0 && cur.upper < 0.0 && cur.upper <= (1.0 - sigma) * cur.lower) {
      res.status = SubproblemStatus::sigma_certified;
      res.sigma_certified = true;
      return res;
    }
    if (k == cfg.max_inner || lipschitz == 0.0) {
      res.status = SubproblemStatus::max_inner;
      res.sigma_certified = false;
      return res;
    }

    // Projected gradient step on 1/2 ||J^T w||^2; the gradient is J J^T w = -J v.
    const Vector grad = gram * w;
    Vector next = project_simplex(w - grad / lipschitz);
    double next_obj = 0.5 * (jac.transpose() * next).squaredNorm();
    // A step of 1/L never increases the objective when L bounds ||J J^T||;
    // an increase beyond rounding means the power estimate fell short.
    for (int guard = 0; guard < 60 && next_obj > dual_obj * (1.0 + 1e-14) + noise; ++guard) {
      lipschitz *= 2.0;
      next = project_simplex(w - grad / lipschitz);
      next_obj = 0.5 * (jac.transpose() * next).squaredNorm();
    }
    w = std::move(next);
    dual_obj = next_obj;
  }
}

}  // namespace

DirectionResult solve_exact(const Matrix& jac, const SubproblemConfig& cfg) {
  return solve_dual(jac, 0.0, cfg);
}

DirectionResult solve_sigma_approx(const Matrix& jac, double sigma, const SubproblemConfig& cfg) {
  if (!(sigma >= 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("solve_sigma_approx: sigma must lie in [0, 1)");
  }
  return solve_dual(jac, sigma, cfg);
}

bool check_sigma_certificate(const Matrix& jac, const Vector& v, double alpha_exact,
                             double sigma) {
  const double slack = 1e-12 * std::max(1.0, std::abs(alpha_exact));
  return primal_value(jac, v) <= (1.0 - sigma) * alpha_exact + slack;
}

}  // namespace msd
