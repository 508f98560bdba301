#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "msd/diagnostics.hpp"
#include "msd/run_config.hpp"
#include "msd/solver.hpp"

namespace msd {

/// Doubles are written with 17 significant digits so they read back exactly.
std::string format_real(double value);

/// Header k,t,j,alpha_upper,alpha_lower,norm_v,x_1..x_n,F_1..F_m and one row
/// per record.
void write_trajectory_csv(std::ostream& out, const RunReport& report);

/// Inverse of write_trajectory_csv. Search directions are not stored, so the
/// records come back with empty `v`; everything else round-trips bitwise.
RunReport read_trajectory_csv(std::istream& in);

nlohmann::json to_json(const CheckOutcome& check);
nlohmann::json to_json(const DiagnosticsSummary& summary);

nlohmann::json run_report_json(const RunConfig& cfg, const ResolvedProblem& resolved,
                               const RunReport& report, const DiagnosticsSummary& summary);

struct SweepRow {
  double sigma = 0.0;
  int iterations = 0;
  long total_inner_iterations = 0;
  double final_alpha = 0.0;
  Termination termination = Termination::max_iter;
};

SweepRow sweep_row(double sigma, const RunReport& report);

/// Columns sigma,iterations,total_inner_iterations,final_alpha,termination.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// 0 critical_point, 2 max_iter, 3 numerical failure.
int exit_code(Termination t);

}  // namespace msd
