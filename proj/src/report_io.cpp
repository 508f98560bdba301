#include "msd/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace msd {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const RunReport& report) {
  const auto n = report.records.empty() ? 0 : report.records.front().x.size();
  const auto m = report.records.empty() ? 0 : report.records.front().fx.size();
  out << "k,t,j,alpha_upper,alpha_lower,norm_v";
  for (Eigen::Index i = 1; i <= n; ++i) out << ",x_" << i;
  for (Eigen::Index i = 1; i <= m; ++i) out << ",F_" << i;
  out << '\n';
  for (const auto& r : report.records) {
    out << r.k << ',' << format_real(r.t) << ',' << r.j << ',' << format_real(r.alpha_upper)
        << ',' << format_real(r.alpha_lower) << ',' << format_real(r.norm_v);
    for (Eigen::Index i = 0; i < r.x.size(); ++i) out << ',' << format_real(r.x[i]);
    for (Eigen::Index i = 0; i < r.fx.size(); ++i) out << ',' << format_real(r.fx[i]);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

double to_real(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::runtime_error("trajectory: bad number '" + s + "'");
  return v;
}

}  // namespace

RunReport read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("trajectory: missing header");
  const auto header = split(line);
  int n = 0;
  int m = 0;
  for (const auto& h : header) {
    if (h.rfind("x_", 0) == 0) ++n;
    if (h.rfind("F_", 0) == 0) ++m;
  }
  if (header.size() != static_cast<std::size_t>(6 + n + m) || header[0] != "k") {
    throw std::runtime_error("trajectory: unexpected header");
  }
  RunReport report;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != header.size()) throw std::runtime_error("trajectory: ragged row");
    IterationRecord r;
    r.k = std::atoi(f[0].c_str());
    r.t = to_real(f[1]);
    r.j = std::atoi(f[2].c_str());
    r.alpha_upper = to_real(f[3]);
    r.alpha_lower = to_real(f[4]);
    r.norm_v = to_real(f[5]);
    r.x.resize(n);
    r.fx.resize(m);
    for (int i = 0; i < n; ++i) r.x[i] = to_real(f[static_cast<std::size_t>(6 + i)]);
    for (int i = 0; i < m; ++i) r.fx[i] = to_real(f[static_cast<std::size_t>(6 + n + i)]);
    report.records.push_back(std::move(r));
  }
  if (!report.records.empty()) {
    report.final_x = report.records.back().x;
    report.final_alpha = report.records.back().alpha_upper;
  }
  return report;
}

namespace {

nlohmann::json real_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json vector_json(const Vector& v) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

nlohmann::json to_json(const CheckOutcome& check) {
  nlohmann::json j;
  j["status"] = to_string(check.status);
  j["worst_violation"] = check.worst_index ? real_or_null(check.worst_violation) : nullptr;
  j["worst_index"] = check.worst_index ? nlohmann::json(*check.worst_index) : nullptr;
  j["checked"] = check.checked;
  j["skipped"] = check.skipped;
  return j;
}

nlohmann::json to_json(const DiagnosticsSummary& s) {
  nlohmann::json j;
  j["monotone"] = to_json(s.monotone);
  j["level_set"] = to_json(s.level_set);
  j["summability"] = to_json(s.summability);
  j["quasi_fejer"] = to_json(s.fejer);
  j["descent_chain"] = to_json(s.descent_chain);
  j["proximity"] = s.proximity ? to_json(*s.proximity) : nlohmann::json(nullptr);
  j["all_passed"] = s.all_passed();
  return j;
}

nlohmann::json run_report_json(const RunConfig& cfg, const ResolvedProblem& resolved,
                               const RunReport& report, const DiagnosticsSummary& summary) {
  nlohmann::json j;
  nlohmann::json config;
  config["problem"] = cfg.problem;
  if (!cfg.criteria.empty()) config["criteria"] = cfg.criteria;
  config["x0"] = vector_json(resolved.x0);
  config["beta"] = cfg.solver.beta;
  config["sigma"] = cfg.solver.sigma;
  config["eps_critical"] = cfg.solver.eps_critical;
  config["max_iter"] = cfg.solver.max_iter;
  config["max_j"] = cfg.solver.max_j;
  config["output"] = cfg.output;
  if (cfg.reference) config["reference"] = vector_json(*cfg.reference);
  j["config"] = config;
  j["problem"] = {{"name", resolved.name},
                  {"n", resolved.problem.n()},
                  {"m", resolved.problem.m()},
                  {"jacobian", resolved.problem.jacobian_is_approximate() ? "finite_difference"
                                                                          : "analytic"}};
  j["termination"] = to_string(report.termination);
  j["iterations"] = report.iterations();
  j["total_inner_iterations"] = report.total_inner_iterations;
  j["final_x"] = vector_json(report.final_x);
  j["final_F"] = report.records.empty() ? nlohmann::json(nullptr)
                                        : vector_json(report.records.back().fx);
  j["final_alpha"] = report.final_alpha;
  j["diagnostics"] = to_json(summary);
  return j;
}

SweepRow sweep_row(double sigma, const RunReport& report) {
  return {sigma, report.iterations(), report.total_inner_iterations, report.final_alpha,
          report.termination};
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "sigma,iterations,total_inner_iterations,final_alpha,termination\n";
  for (const auto& r : rows) {
    out << format_real(r.sigma) << ',' << r.iterations << ',' << r.total_inner_iterations << ','
        << format_real(r.final_alpha) << ',' << to_string(r.termination) << '\n';
  }
}

int exit_code(Termination t) {
  switch (t) {
    case Termination::critical_point: return 0;
    case Termination::max_iter: return 2;
    case Termination::linesearch_failure:
    case Termination::subproblem_failure: return 3;
  }
  return 3;
}

}  // namespace msd
