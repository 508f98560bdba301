// Acceptance suite: one PASS/FAIL line per criterion. The suite is executed
// twice into separate artifact directories and the artifacts are compared
// byte for byte for the determinism criterion.
//
// usage: msd_acceptance [artifact_dir]

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "msd/diagnostics.hpp"
#include "msd/direction.hpp"
#include "msd/linesearch.hpp"
#include "msd/oracle.hpp"
#include "msd/problems.hpp"
#include "msd/report_io.hpp"
#include "msd/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace msd;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome(const fs::path&)> body;
};

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

void write_trajectory(const fs::path& path, const RunReport& report) {
  std::ofstream out(path);
  write_trajectory_csv(out, report);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Matrix random_jacobian(oracle::SampleStream& rng, int m, int n) {
  Matrix jac(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) jac(r, c) = rng.uniform(-10.0, 10.0);
  return jac;
}

// Fine lattice used where tolerances are tight: six extra decimal digits past
// the default resolution.
oracle::GridSpec fine_grid(int m) {
  oracle::GridSpec g = oracle::default_grid(m);
  g.refinement_rounds = 7;
  return g;
}

double distance_to_unit_segment(const Vector& x) {
  const double s = std::clamp(x[0], 0.0, 1.0);
  return std::hypot(x[0] - s, x[1]);
}

// Starts for quad_pair shared by several criteria.
std::vector<Vector> quad_pair_starts() {
  std::vector<Vector> starts;
  for (int i = 0; i < 20; ++i) {
    oracle::SampleStream rng(2024, static_cast<std::uint64_t>(i));
    starts.push_back(rng.uniform_vector(2, {}));
  }
  return starts;
}

// ---------------------------------------------------------------------------

Outcome subproblem_correctness(const fs::path& dir) {
  Outcome out;
  double worst_alpha = 0.0, worst_v = 0.0, worst_identity = 0.0;
  int failures = 0;
  json rows = json::array();
  for (int i = 0; i < 200; ++i) {
    oracle::SampleStream rng(1, static_cast<std::uint64_t>(i));
    const int m = 2 + i % 2;
    const int n = 1 + static_cast<int>(rng.uniform() * 5.0);
    const Matrix jac = random_jacobian(rng, m, n);
    const DirectionResult prod = solve_exact(jac);
    const oracle::OracleDirection ref = oracle::brute_force_direction(jac);
    const double norm_j = std::max(1.0, jac.operatorNorm());

    const double alpha_ratio = std::abs(prod.alpha_upper - ref.alpha) / (1e-4 * norm_j * norm_j);
    const double v_ratio = (prod.v - ref.v).norm() / (1e-2 * norm_j);
    // alpha = -1/2 ||v||^2 up to the inner solver's stopping tolerance for the
    // branch it stopped on: |alpha|, ||v|| <= eps_critical at a critical
    // point, otherwise relative 1e-10 floored at the rounding level of
    // v = -J^T w as seen through J v.
    const SubproblemConfig sub;
    const double rounding = 8.0 * m * std::numeric_limits<double>::epsilon() *
                            jac.rowwise().norm().maxCoeff() *
                            (jac.transpose().cwiseAbs() * prod.weights).norm();
    const double gap_tol =
        prod.status == SubproblemStatus::critical
            ? sub.eps_critical + 0.5 * sub.eps_critical * sub.eps_critical
            : std::max(1e-10 * std::abs(prod.alpha_lower), rounding);
    const double identity = std::abs(prod.alpha_upper + 0.5 * prod.v.squaredNorm()) / gap_tol;

    worst_alpha = std::max(worst_alpha, alpha_ratio);
    worst_v = std::max(worst_v, v_ratio);
    worst_identity = std::max(worst_identity, identity);
    const bool ok = prod.status != SubproblemStatus::max_inner && alpha_ratio <= 1.0 &&
                    v_ratio <= 1.0 && identity <= 1.0;
    if (!ok) ++failures;
    rows.push_back({{"m", m}, {"n", n}, {"alpha", prod.alpha_upper}, {"oracle_alpha", ref.alpha},
                    {"ok", ok}});
  }
  write_json(dir / "c1_subproblem.json", rows);
  out.passed = failures == 0;
  out.detail = "200 Jacobians, " + std::to_string(failures) + " failures; worst alpha err " +
               fmt(worst_alpha) + "x tol, v err " + fmt(worst_v) + "x tol, alpha=-|v|^2/2 " +
               fmt(worst_identity) + "x gap tol";
  return out;
}

Outcome certificate_soundness(const fs::path& dir) {
  Outcome out;
  int certified = 0, violations = 0;
  double worst_def = -std::numeric_limits<double>::infinity();
  double worst_prox = -std::numeric_limits<double>::infinity();
  json rows = json::array();
  for (double sigma : {0.1, 0.5, 0.9}) {
    for (int i = 0; i < 100; ++i) {
      oracle::SampleStream rng(2 + static_cast<std::uint64_t>(sigma * 10),
                               static_cast<std::uint64_t>(i));
      const int m = 2 + i % 2;
      const int n = 1 + static_cast<int>(rng.uniform() * 5.0);
      const Matrix jac = random_jacobian(rng, m, n);
      const DirectionResult r = solve_sigma_approx(jac, sigma);
      if (!r.sigma_certified) continue;
      ++certified;
      const oracle::OracleDirection ref = oracle::brute_force_direction(jac, fine_grid(m));
      // Definition inequality against the oracle's lower bound on alpha(x),
      // the harder side to satisfy.
      const double primal = (jac * r.v).maxCoeff() + 0.5 * r.v.squaredNorm();
      const double def_excess = primal - (1.0 - sigma) * ref.alpha;
      // Proximity bound with the oracle's upper bound on alpha(x), i.e. the
      // smaller |alpha|.
      const double prox_excess =
          (r.v - ref.v).squaredNorm() - 2.0 * sigma * std::abs(ref.alpha_primal);
      worst_def = std::max(worst_def, def_excess);
      worst_prox = std::max(worst_prox, prox_excess);
      const bool ok = def_excess <= 1e-8 && prox_excess <= 1e-8;
      if (!ok) ++violations;
      rows.push_back({{"sigma", sigma}, {"instance", i}, {"primal", primal},
                      {"oracle_alpha", ref.alpha}, {"ok", ok}});
    }
  }
  write_json(dir / "c2_certificate.json", rows);
  out.passed = violations == 0 && certified > 0;
  out.detail = std::to_string(certified) + " certified of 300, " + std::to_string(violations) +
               " violations; worst excess: definition " + fmt(worst_def) + ", proximity " +
               fmt(worst_prox) + " (slack 1e-08)";
  return out;
}

struct AcceptanceRun {
  std::string label;
  const ProblemDescriptor* problem;
  RunReport report;
};

std::vector<AcceptanceRun> trajectory_runs(const fs::path& dir) {
  std::vector<AcceptanceRun> runs;
  const SolverConfig cfg;
  const auto& quad = get_problem("quad_pair");
  const auto starts = quad_pair_starts();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    runs.push_back({"quad_pair_" + std::to_string(i), &quad, run(quad.problem, starts[i], cfg)});
  }
  for (const char* name : {"scalar_quad", "quasi_exp"}) {
    const auto& d = get_problem(name);
    runs.push_back({name, &d, run(d.problem, d.recommended_x0, cfg)});
  }
  for (const auto& r : runs) write_trajectory(dir / ("c3_" + r.label + ".csv"), r.report);
  return runs;
}

Outcome trajectory_invariants(const fs::path& dir) {
  Outcome out;
  const auto runs = trajectory_runs(dir);
  std::string failed;
  json rows = json::array();
  for (const auto& r : runs) {
    const CheckOutcome mono = check_monotone(r.report);
    const CheckOutcome sum = check_summability(r.report);
    const CheckOutcome level = check_level_set(r.report);
    const bool ok = mono.passed() && sum.passed() && level.passed();
    if (!ok) failed += " " + r.label;
    rows.push_back({{"run", r.label}, {"monotone", to_json(mono)}, {"summability", to_json(sum)},
                    {"level_set", to_json(level)}});
  }
  write_json(dir / "c3_invariants.json", rows);
  out.passed = failed.empty();
  out.detail = std::to_string(runs.size()) + " runs (20 quad_pair, scalar_quad, quasi_exp)" +
               (failed.empty() ? "" : "; failed:" + failed);
  return out;
}

Outcome full_convergence(const fs::path& dir) {
  Outcome out;
  const SolverConfig cfg;
  const auto& quad = get_problem("quad_pair");
  const auto& qexp = get_problem("quasi_exp");
  std::vector<AcceptanceRun> runs;
  const auto starts = quad_pair_starts();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    runs.push_back({"quad_pair_" + std::to_string(i), &quad, run(quad.problem, starts[i], cfg)});
  }
  runs.push_back({"quasi_exp_x0", &qexp, run(qexp.problem, qexp.recommended_x0, cfg)});
  // quasi_exp flattens far from its centres, so its starts stay where the
  // criteria are still informative.
  for (int i = 0; i < 10; ++i) {
    oracle::SampleStream rng(4, static_cast<std::uint64_t>(i));
    runs.push_back({"quasi_exp_" + std::to_string(i), &qexp,
                    run(qexp.problem, rng.uniform_vector(2, {-2.0, 4.0}), cfg)});
  }

  std::string failed;
  double worst_alpha = 0.0, worst_dist = 0.0;
  int max_iters = 0;
  json rows = json::array();
  for (const auto& r : runs) {
    const RunReport& rep = r.report;
    bool ok = rep.termination == Termination::critical_point &&
              std::abs(rep.final_alpha) <= 1e-8 && rep.iterations() <= 10'000;
    worst_alpha = std::max(worst_alpha, std::abs(rep.final_alpha));
    max_iters = std::max(max_iters, rep.iterations());
    json row = {{"run", r.label},
                {"termination", to_string(rep.termination)},
                {"iterations", rep.iterations()},
                {"final_alpha", rep.final_alpha}};
    if (r.problem == &quad) {
      const double dist = distance_to_unit_segment(rep.final_x);
      const bool pareto = oracle::check_weak_pareto_local(quad.problem, rep.final_x, 0.5, 10'000,
                                                          static_cast<std::uint64_t>(rows.size()));
      worst_dist = std::max(worst_dist, dist);
      ok = ok && dist <= 1e-4 && pareto;
      row["distance_to_segment"] = dist;
      row["weak_pareto"] = pareto;
    }
    if (!ok) failed += " " + r.label;
    row["ok"] = ok;
    rows.push_back(row);
    write_trajectory(dir / ("c4_" + r.label + ".csv"), rep);
  }
  write_json(dir / "c4_convergence.json", rows);
  out.passed = failed.empty();
  out.detail = std::to_string(runs.size()) + " runs; worst |alpha| " + fmt(worst_alpha) +
               ", max iterations " + std::to_string(max_iters) + ", worst segment distance " +
               fmt(worst_dist) + (failed.empty() ? "" : "; failed:" + failed);
  return out;
}

Outcome quasi_fejer(const fs::path& dir) {
  Outcome out;
  const auto& quad = get_problem("quad_pair");
  int convergent = 0, failures = 0, steps = 0;
  double worst = -std::numeric_limits<double>::infinity();
  json rows = json::array();
  // Exact directions reach the segment in one step; inexact ones take many,
  // which is where the inequality has something to bite on.
  for (double sigma : {0.0, 0.5, 0.9}) {
    SolverConfig cfg;
    cfg.sigma = sigma;
    for (const Vector& x0 : quad_pair_starts()) {
      const RunReport rep = run(quad.problem, x0, cfg);
      if (rep.termination != Termination::critical_point) continue;
      ++convergent;
      const CheckOutcome c = check_quasi_fejer(rep, quad.problem, {rep.final_x, 0.0});
      steps += c.checked;
      worst = std::max(worst, c.worst_violation);
      if (!c.passed()) ++failures;
      rows.push_back(to_json(c));
    }
  }
  write_json(dir / "c5_fejer.json", rows);
  out.passed = failures == 0 && convergent > 0;
  out.detail = std::to_string(convergent) + " convergent runs, " + std::to_string(steps) +
               " steps, " + std::to_string(failures) + " failing runs; worst excess " + fmt(worst);
  return out;
}

Outcome paper_cubic_example(const fs::path& dir) {
  Outcome out;
  const auto& cubic = get_problem("paper_cubic");
  SolverConfig tight;
  tight.eps_critical = 1e-12;
  tight.subproblem.eps_critical = 1e-12;
  int not_critical = 0, not_k0 = 0;
  double worst_alpha = 0.0;
  for (int i = 0; i < 1000; ++i) {
    oracle::SampleStream rng(6, static_cast<std::uint64_t>(i));
    const Vector t = rng.uniform_vector(1, {});
    const CriticalityCheck c = is_critical(cubic.problem.jacobian(t), tight);
    worst_alpha = std::max(worst_alpha, std::abs(c.alpha));
    if (!c.critical || std::abs(c.alpha) > 1e-12) ++not_critical;
    const RunReport rep = run(cubic.problem, t, SolverConfig{});
    if (rep.records.size() != 1 || rep.records[0].k != 0 ||
        rep.termination != Termination::critical_point) {
      ++not_k0;
    }
  }
  const oracle::ViolationReport segments =
      oracle::sample_quasiconvex(cubic.problem, 1000, 6, cubic.sampling_box);
  int pareto_fail = 0;
  for (int i = 0; i < 20; ++i) {
    oracle::SampleStream rng(66, static_cast<std::uint64_t>(i));
    const Vector t = rng.uniform_vector(1, {});
    if (!oracle::check_weak_pareto_local(cubic.problem, t, 0.5, 1000,
                                         static_cast<std::uint64_t>(i))) {
      ++pareto_fail;
    }
  }
  write_json(dir / "c6_paper_cubic.json", {{"not_critical", not_critical},
                                           {"not_k0", not_k0},
                                           {"worst_alpha", worst_alpha},
                                           {"segment_violations", segments.violations},
                                           {"weak_pareto_failures", pareto_fail}});
  out.passed = not_critical == 0 && not_k0 == 0 && segments.clean() && pareto_fail == 0;
  out.detail = "1000 points: " + std::to_string(not_critical) + " not critical (worst |alpha| " +
               fmt(worst_alpha) + "), " + std::to_string(not_k0) + " runs past k=0; " +
               std::to_string(segments.violations) + " segment violations, " +
               std::to_string(pareto_fail) + "/20 weak-Pareto failures";
  return out;
}

// Classical gradient descent for a scalar f with steps 2^-j, j = 0, 1, ...:
// accept the first t with f(x + t d) - f(x) <= beta t <grad, d>, d = -grad.
// Stops when 1/2 ||grad||^2 <= eps (the optimal value of the direction
// problem for a single criterion is -1/2 ||grad||^2).
struct ScalarFn {
  std::function<double(const std::vector<double>&)> f;
  std::function<std::vector<double>(const std::vector<double>&)> grad;
};

std::vector<std::vector<double>> reference_descent(const ScalarFn& fn, std::vector<double> x,
                                                   double beta, double eps, int max_iter) {
  std::vector<std::vector<double>> path{x};
  for (int k = 0; k < max_iter; ++k) {
    const std::vector<double> g = fn.grad(x);
    double gg = 0.0;
    for (double gi : g) gg += gi * gi;
    if (0.5 * gg <= eps) break;
    const double fx = fn.f(x);
    bool accepted = false;
    for (int j = 0; j <= 60 && !accepted; ++j) {
      const double t = std::ldexp(1.0, -j);
      std::vector<double> trial(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + t * -g[i];
      const double ft = fn.f(trial);
      if (std::isfinite(ft) && ft - fx <= beta * t * -gg) {
        x = trial;
        accepted = true;
      }
    }
    if (!accepted) break;
    path.push_back(x);
  }
  return path;
}

Outcome scalar_reduction(const fs::path& dir) {
  Outcome out;
  struct Case {
    std::string label;
    MultiObjective problem;
    ScalarFn reference;
    Vector x0;
  };
  std::vector<Case> cases;
  const ScalarFn half_norm{[](const std::vector<double>& x) {
                             double s = 0.0;
                             for (double xi : x) s += xi * xi;
                             return 0.5 * s;
                           },
                           [](const std::vector<double>& x) { return x; }};
  const auto& sq = get_problem("scalar_quad");
  cases.push_back({"scalar_quad_x0", sq.problem, half_norm, sq.recommended_x0});
  for (int i = 0; i < 10; ++i) {
    oracle::SampleStream rng(7, static_cast<std::uint64_t>(i));
    cases.push_back({"scalar_quad_" + std::to_string(i), sq.problem, half_norm,
                     rng.uniform_vector(2, {})});
  }
  // An ill-conditioned quadratic and a non-quadratic function take many
  // backtracking steps, which the one-step scalar_quad runs never do.
  const ScalarFn aniso{[](const std::vector<double>& x) {
                         return 0.5 * (x[0] * x[0] + 10.0 * x[1] * x[1]);
                       },
                       [](const std::vector<double>& x) {
                         return std::vector<double>{x[0], 10.0 * x[1]};
                       }};
  cases.push_back({"anisotropic",
                   MultiObjective(
                       2, 1,
                       [](const Vector& x) {
                         Vector f(1);
                         f[0] = 0.5 * (x[0] * x[0] + 10.0 * x[1] * x[1]);
                         return f;
                       },
                       [](const Vector& x) {
                         Matrix j(1, 2);
                         j << x[0], 10.0 * x[1];
                         return j;
                       }),
                   aniso, (Vector(2) << 3.0, -1.0).finished()});
  const ScalarFn logq{[](const std::vector<double>& x) {
                        return std::log1p(x[0] * x[0] + 4.0 * x[1] * x[1]);
                      },
                      [](const std::vector<double>& x) {
                        const double q = 1.0 + x[0] * x[0] + 4.0 * x[1] * x[1];
                        return std::vector<double>{2.0 * x[0] / q, 8.0 * x[1] / q};
                      }};
  cases.push_back({"log_quadratic",
                   MultiObjective(
                       2, 1,
                       [](const Vector& x) {
                         Vector f(1);
                         f[0] = std::log1p(x[0] * x[0] + 4.0 * x[1] * x[1]);
                         return f;
                       },
                       [](const Vector& x) {
                         const double q = 1.0 + x[0] * x[0] + 4.0 * x[1] * x[1];
                         Matrix j(1, 2);
                         j << 2.0 * x[0] / q, 8.0 * x[1] / q;
                         return j;
                       }),
                   logq, (Vector(2) << 2.0, 1.5).finished()});

  const SolverConfig cfg;
  double worst = 0.0;
  std::string failed;
  int total_steps = 0;
  json rows = json::array();
  for (const auto& c : cases) {
    const RunReport rep = run(c.problem, c.x0, cfg);
    const auto ref = reference_descent(c.reference, std::vector<double>(c.x0.data(), c.x0.data() + c.x0.size()),
                                       cfg.beta, cfg.eps_critical, cfg.max_iter);
    bool ok = rep.records.size() == ref.size() && rep.termination == Termination::critical_point;
    const std::size_t common = std::min(rep.records.size(), ref.size());
    for (std::size_t k = 0; k < common; ++k) {
      double err = 0.0;
      for (std::size_t i = 0; i < ref[k].size(); ++i) {
        err = std::max(err, std::abs(rep.records[k].x[static_cast<Eigen::Index>(i)] - ref[k][i]));
      }
      worst = std::max(worst, err);
      if (err > 1e-12) ok = false;
    }
    total_steps += rep.iterations();
    if (!ok) failed += " " + c.label;
    rows.push_back({{"case", c.label}, {"steps", rep.iterations()},
                    {"reference_steps", static_cast<int>(ref.size()) - 1}, {"ok", ok}});
    write_trajectory(dir / ("c7_" + c.label + ".csv"), rep);
  }
  write_json(dir / "c7_scalar.json", rows);
  out.passed = failed.empty();
  out.detail = std::to_string(cases.size()) + " runs, " + std::to_string(total_steps) +
               " steps; worst iterate deviation " + fmt(worst) +
               (failed.empty() ? "" : "; failed:" + failed);
  return out;
}

Outcome armijo_maximality(const fs::path& dir) {
  Outcome out;
  const auto names = problem_names();
  const double beta = 0.5;
  const SolverConfig crit_cfg;
  int triples = 0, failures = 0, exhausted = 0, max_j = 0, attempts = 0;
  json rows = json::array();
  while (triples < 500 && attempts < 5000) {
    oracle::SampleStream rng(8, static_cast<std::uint64_t>(attempts++));
    const auto& d = get_problem(names[static_cast<std::size_t>(attempts) % names.size()]);
    const double sigma = std::array<double, 3>{0.0, 0.5, 0.9}[static_cast<std::size_t>(attempts) % 3];
    const Vector x = rng.uniform_vector(d.problem.n(), d.sampling_box);
    const Matrix jac = d.problem.jacobian(x);
    if (is_critical(jac, crit_cfg).critical) continue;
    const DirectionResult dir_r = solve_sigma_approx(jac, sigma);
    if (!dir_r.sigma_certified) continue;
    ++triples;
    const Vector fx = d.problem.evaluate(x);
    const Vector jv = jac * dir_r.v;
    const StepResult s = armijo_step(d.problem, x, fx, dir_r.v, jv, beta, 60);
    // Condition re-evaluated here from scratch.
    auto holds = [&](double t) {
      const Vector f = d.problem.evaluate_unchecked(x + t * dir_r.v);
      if (!all_finite(f)) return false;
      return ((f - fx).array() <= beta * t * jv.array()).all();
    };
    bool ok = s.accepted;
    if (!s.accepted) {
      ++exhausted;
    } else {
      max_j = std::max(max_j, s.j);
      ok = s.t == std::ldexp(1.0, -s.j) && holds(s.t) && (s.j == 0 || !holds(2.0 * s.t));
    }
    if (!ok) ++failures;
    rows.push_back({{"problem", d.name}, {"sigma", sigma}, {"j", s.j}, {"ok", ok}});
  }
  write_json(dir / "c8_armijo.json", rows);
  out.passed = triples == 500 && failures == 0 && exhausted == 0;
  out.detail = std::to_string(triples) + " triples, " + std::to_string(failures) + " failures, " +
               std::to_string(exhausted) + " exhausted max_j; largest j " + std::to_string(max_j);
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "subproblem correctness", subproblem_correctness},
      {2, "sigma-certificate soundness", certificate_soundness},
      {3, "trajectory invariants", trajectory_invariants},
      {4, "full convergence", full_convergence},
      {5, "quasi-Fejer inequality", quasi_fejer},
      {6, "cubic pair example", paper_cubic_example},
      {7, "scalar reduction", scalar_reduction},
      {8, "Armijo maximality", armijo_maximality},
  };
  return list;
}

std::vector<Outcome> run_suite(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<Outcome> outcomes;
  for (const auto& c : criteria()) {
    try {
      outcomes.push_back(c.body(dir));
    } catch (const std::exception& e) {
      outcomes.push_back({false, std::string("exception: ") + e.what()});
    }
  }
  return outcomes;
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome compare_artifacts(const fs::path& a, const fs::path& b) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(a)) files.push_back(e.path().filename());
  std::sort(files.begin(), files.end());
  int count_b = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(b)) ++count_b;
  std::string differing;
  for (const auto& f : files) {
    if (!fs::exists(b / f) || read_bytes(a / f) != read_bytes(b / f)) {
      differing += " " + f.string();
    }
  }
  Outcome out;
  out.passed = differing.empty() && count_b == static_cast<int>(files.size()) && !files.empty();
  out.detail = std::to_string(files.size()) + " artifacts compared" +
               (differing.empty() ? "" : "; differ:" + differing);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_artifacts");
  const auto first = run_suite(root / "run1");
  const auto second = run_suite(root / "run2");

  bool all = true;
  const auto& list = criteria();
  for (std::size_t i = 0; i < list.size(); ++i) {
    Outcome o = first[i];
    if (second[i].passed != o.passed) {
      o.passed = false;
      o.detail += "; second execution disagrees";
    }
    all = all && o.passed;
    std::printf("%s [%d] %s: %s\n", o.passed ? "PASS" : "FAIL", list[i].id, list[i].title,
                o.detail.c_str());
  }
  const Outcome det = compare_artifacts(root / "run1", root / "run2");
  all = all && det.passed;
  std::printf("%s [9] determinism: %s\n", det.passed ? "PASS" : "FAIL", det.detail.c_str());
  std::fflush(stdout);
  return all ? 0 : 1;
}
