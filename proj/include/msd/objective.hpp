#pragma once

#include <functional>
#include <optional>

#include "msd/types.hpp"

namespace msd {

/// A continuously differentiable map F: R^n -> R^m.
///
/// The analytic Jacobian is optional. Without it, `jacobian()` falls back to
/// central differences with step h_j = 1e-6 * max(1, |x_j|) and
/// `jacobian_is_approximate()` reports true.
///
/// Instances are immutable after construction and safe to share between
/// threads.
class MultiObjective {
 public:
  using EvalFn = std::function<Vector(const Vector&)>;
  using JacFn = std::function<Matrix(const Vector&)>;

  MultiObjective(int n, int m, EvalFn eval, std::optional<JacFn> jac = std::nullopt);

  int n() const { return n_; }
  int m() const { return m_; }

  /// F(x). Throws DimensionError on a length mismatch and NonFiniteError if
  /// either x or F(x) has NaN/Inf entries.
  Vector evaluate(const Vector& x) const;

  /// Same as evaluate(), but a non-finite F(x) is returned as-is instead of
  /// throwing. Line searches use this to treat overflow as a failed trial.
  Vector evaluate_unchecked(const Vector& x) const;

  /// JF(x), m x n.
  Matrix jacobian(const Vector& x) const;

  bool jacobian_is_approximate() const { return !jac_.has_value(); }

 private:
  void check_point(const Vector& x) const;
  Matrix central_difference(const Vector& x) const;

  int n_;
  int m_;
  EvalFn eval_;
  std::optional<JacFn> jac_;
};

}  // namespace msd
