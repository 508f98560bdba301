#pragma once

#include <functional>
#include <string>
#include <vector>

#include "msd/objective.hpp"
#include "msd/oracle.hpp"

namespace msd {

enum class ConvexityClass { convex, pseudo_convex, quasi_convex, none };

const char* to_string(ConvexityClass c);

struct ProblemDescriptor {
  std::string name;
  MultiObjective problem;
  ConvexityClass convexity_class = ConvexityClass::none;
  /// Membership in the analytic critical set, to within `tol` in distance.
  std::function<bool(const Vector& x, double tol)> in_critical_set;
  /// Draws a point of the critical set from a uniform u in [0,1)^k.
  std::function<Vector(oracle::SampleStream&)> sample_critical;
  Vector recommended_x0;
  oracle::Box sampling_box{};
  std::string description;
};

/// Registered names: quad_pair, paper_cubic, quasi_exp, scalar_quad,
/// nonconvex_demo. Throws std::out_of_range for anything else.
const ProblemDescriptor& get_problem(const std::string& name);

std::vector<std::string> problem_names();

/// F(x) = (1/2 ||x - a||^2, 1/2 ||x - b||^2); critical set is the segment [a, b].
ProblemDescriptor make_quad_pair(const Vector& a, const Vector& b);

}  // namespace msd
