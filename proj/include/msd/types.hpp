#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace msd {

using Vector = Eigen::VectorXd;
/// Row i holds the gradient of criterion i, so the shape is m x n.
using Matrix = Eigen::MatrixXd;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  return a.array().isFinite().all();
}

/// Componentwise a <= b.
inline bool weakly_dominates(const Vector& a, const Vector& b) {
  return (a.array() <= b.array()).all();
}

/// Componentwise a < b.
inline bool strictly_dominates(const Vector& a, const Vector& b) {
  return (a.array() < b.array()).all();
}

}  // namespace msd
