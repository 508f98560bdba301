#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "msd/problems.hpp"

namespace msd {

struct VerificationCheck {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerificationReport {
  std::string problem;
  std::uint64_t seed = 0;
  std::vector<VerificationCheck> checks;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Validates a builtin problem against the oracles: analytic Jacobian vs.
/// central differences, the analytic critical set vs. is_critical on and off
/// the set, the sampled convexity class (skipped for class `none`), weak
/// Pareto optimality of critical points when the class implies it, and
/// production/oracle agreement of the direction subproblem at the problem's
/// dimensions.
VerificationReport verify_problem(const ProblemDescriptor& d, std::uint64_t seed);

}  // namespace msd
