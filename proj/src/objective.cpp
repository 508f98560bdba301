#include "msd/objective.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace msd {

MultiObjective::MultiObjective(int n, int m, EvalFn eval, std::optional<JacFn> jac)
    : n_(n), m_(m), eval_(std::move(eval)), jac_(std::move(jac)) {
  if (n_ <= 0 || m_ <= 0) {
    throw DimensionError("MultiObjective: n and m must be positive");
  }
  if (!eval_) {
    throw std::invalid_argument("MultiObjective: missing evaluation function");
  }
}

void MultiObjective::check_point(const Vector& x) const {
  if (x.size() != n_) {
    throw DimensionError("point has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(n_));
  }
  if (!all_finite(x)) {
    throw NonFiniteError("point has non-finite entries");
  }
}

Vector MultiObjective::evaluate_unchecked(const Vector& x) const {
  if (x.size() != n_) {
    throw DimensionError("point has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(n_));
  }
  Vector fx = eval_(x);
  if (fx.size() != m_) {
    throw DimensionError("objective returned " + std::to_string(fx.size()) +
                         " values, expected " + std::to_string(m_));
  }
  return fx;
}

Vector MultiObjective::evaluate(const Vector& x) const {
  check_point(x);
  Vector fx = evaluate_unchecked(x);
  if (!all_finite(fx)) {
    throw NonFiniteError("objective value is not finite");
  }
  return fx;
}

Matrix MultiObjective::jacobian(const Vector& x) const {
  check_point(x);
  Matrix jac = jac_ ? (*jac_)(x) : central_difference(x);
  if (jac.rows() != m_ || jac.cols() != n_) {
    throw DimensionError("jacobian has shape " + std::to_string(jac.rows()) + "x" +
                         std::to_string(jac.cols()) + ", expected " + std::to_string(m_) +
                         "x" + std::to_string(n_));
  }
  if (!all_finite(jac)) {
    throw NonFiniteError("jacobian has non-finite entries");
  }
  return jac;
}

Matrix MultiObjective::central_difference(const Vector& x) const {
  Matrix jac(m_, n_);
  Vector probe = x;
  for (int j = 0; j < n_; ++j) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[j]));
    probe[j] = x[j] + h;
    const Vector fp = evaluate_unchecked(probe);
    probe[j] = x[j] - h;
    const Vector fm = evaluate_unchecked(probe);
    probe[j] = x[j];
    // (x+h)-(x-h) is not exactly 2h in floating point; use the realized step.
    const double width = (x[j] + h) - (x[j] - h);
    jac.col(j) = (fp - fm) / width;
  }
  return jac;
}

}  // namespace msd
