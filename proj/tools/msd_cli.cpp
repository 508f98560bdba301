// Command-line driver: solve, sweep and verify.

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "msd/diagnostics.hpp"
#include "msd/problems.hpp"
#include "msd/report_io.hpp"
#include "msd/run_config.hpp"
#include "msd/solver.hpp"
#include "msd/verify.hpp"

namespace {

struct Overrides {
  std::string problem;
  std::string config_path;
  std::string x0;
  std::string reference;
  std::optional<double> beta;
  std::optional<double> sigma;
  std::optional<double> eps;
  std::optional<int> max_iter;
  std::string out;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--problem", o.problem, "builtin problem name");
  cmd->add_option("--config", o.config_path, "key = value run configuration file");
  cmd->add_option("--x0", o.x0, "start point, comma separated");
  cmd->add_option("--beta", o.beta, "Armijo parameter in (0,1)");
  cmd->add_option("--sigma", o.sigma, "direction inexactness in [0,1)");
  cmd->add_option("--eps", o.eps, "criticality tolerance on |alpha|");
  cmd->add_option("--max-iter", o.max_iter, "outer iteration cap");
  cmd->add_option("--out", o.out, "output path prefix");
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_option("--reference", o.reference, "explicit x~ for the quasi-Fejer check");
}

msd::RunConfig build_config(const Overrides& o) {
  msd::RunConfig cfg;
  if (!o.config_path.empty()) cfg = msd::RunConfig::parse_file(o.config_path);
  if (!o.problem.empty()) cfg.problem = o.problem;
  if (!o.x0.empty()) cfg.x0 = msd::parse_vector(o.x0);
  if (!o.reference.empty()) cfg.reference = msd::parse_vector(o.reference);
  if (o.beta) cfg.solver.beta = *o.beta;
  if (o.sigma) cfg.solver.sigma = *o.sigma;
  if (o.eps) cfg.solver.eps_critical = *o.eps;
  if (o.max_iter) cfg.solver.max_iter = *o.max_iter;
  if (!o.out.empty()) cfg.output = o.out;
  if (o.seed) cfg.seed = *o.seed;
  cfg.validate();
  return cfg;
}

std::optional<msd::DominatingReference> reference_of(const msd::RunConfig& cfg) {
  if (!cfg.reference) return std::nullopt;
  return msd::DominatingReference{*cfg.reference, 0.0};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

int cmd_solve(const Overrides& o) {
  const msd::RunConfig cfg = build_config(o);
  const msd::ResolvedProblem resolved = msd::resolve_problem(cfg);
  const msd::RunReport report = msd::run(resolved.problem, resolved.x0, cfg.solver);
  const msd::DiagnosticsSummary summary =
      msd::summarize(report, resolved.problem, cfg.solver, reference_of(cfg));

  std::ostringstream csv;
  msd::write_trajectory_csv(csv, report);
  write_file(cfg.output + ".trajectory.csv", csv.str());
  write_file(cfg.output + ".report.json",
             msd::run_report_json(cfg, resolved, report, summary).dump(2) + "\n");

  std::cout << "termination: " << msd::to_string(report.termination)
            << "  iterations: " << report.iterations()
            << "  final_alpha: " << msd::format_real(report.final_alpha) << "\n";
  return msd::exit_code(report.termination);
}

int cmd_sweep(const Overrides& o, const std::vector<double>& sigmas) {
  msd::RunConfig cfg = build_config(o);
  for (double s : sigmas) {
    if (!(s >= 0.0 && s < 1.0)) {
      throw msd::ConfigError("every sigma must lie in [0, 1), got " + msd::format_real(s));
    }
  }
  const msd::ResolvedProblem resolved = msd::resolve_problem(cfg);

  std::vector<std::future<msd::RunReport>> jobs;
  for (double s : sigmas) {
    msd::SolverConfig solver = cfg.solver;
    solver.sigma = s;
    jobs.push_back(std::async(std::launch::async, [&resolved, solver] {
      return msd::run(resolved.problem, resolved.x0, solver);
    }));
  }
  std::vector<msd::SweepRow> rows;
  int code = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const msd::RunReport report = jobs[i].get();
    rows.push_back(msd::sweep_row(sigmas[i], report));
    code = std::max(code, msd::exit_code(report.termination));
  }
  std::ostringstream csv;
  msd::write_sweep_csv(csv, rows);
  write_file(cfg.output + ".sweep.csv", csv.str());
  std::cout << csv.str();
  return code;
}

int cmd_verify(const Overrides& o) {
  std::string name = o.problem;
  std::uint64_t seed = o.seed.value_or(0);
  if (!o.config_path.empty()) {
    const msd::RunConfig cfg = msd::RunConfig::parse_file(o.config_path);
    if (name.empty()) name = cfg.problem;
    if (!o.seed) seed = cfg.seed;
  }
  if (name.empty()) throw msd::ConfigError("verify needs --problem");
  const msd::ProblemDescriptor* d = nullptr;
  try {
    d = &msd::get_problem(name);
  } catch (const std::out_of_range& e) {
    throw msd::ConfigError(e.what());
  }
  const msd::VerificationReport rep = msd::verify_problem(*d, seed);
  const std::string text = rep.to_json().dump(2) + "\n";
  if (!o.out.empty()) write_file(o.out + ".verify.json", text);
  std::cout << text;
  return rep.all_passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiobjective steepest descent with inexact directions and Armijo steps"};
  app.require_subcommand(1);

  Overrides solve_opts;
  auto* solve = app.add_subcommand("solve", "run one solve and write trajectory + report");
  add_common(solve, solve_opts);

  Overrides sweep_opts;
  std::vector<double> sigmas;
  auto* sweep = app.add_subcommand("sweep", "solve once per sigma and tabulate");
  add_common(sweep, sweep_opts);
  sweep->add_option("--sigmas", sigmas, "sigma values")->delimiter(',')->required();

  Overrides verify_opts;
  auto* verify = app.add_subcommand("verify", "check a builtin problem against the oracles");
  add_common(verify, verify_opts);

  auto* list = app.add_subcommand("list", "print builtin problem names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) return cmd_solve(solve_opts);
    if (*sweep) return cmd_sweep(sweep_opts, sigmas);
    if (*verify) return cmd_verify(verify_opts);
    if (*list) {
      for (const auto& name : msd::problem_names()) {
        std::cout << name << "  " << msd::get_problem(name).description << "\n";
      }
      return 0;
    }
  } catch (const msd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
