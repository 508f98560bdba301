#include "msd/run_config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

#include "msd/expression.hpp"
#include "msd/problems.hpp"

namespace msd {

namespace {

std::string located(const std::string& msg, int line, int column) {
  if (line <= 0) return msg;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
}

std::string trim(const std::string& s, std::size_t* leading = nullptr) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    if (leading) *leading = s.size();
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  if (leading) *leading = first;
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& text, int line, int column) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("expected a number", line, column);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(value)) {
    throw ConfigError("'" + t + "' is not a finite number", line, column);
  }
  return value;
}

long long parse_integer(const std::string& text, int line, int column) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long long value = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
    throw ConfigError("'" + t + "' is not an integer", line, column);
  }
  return value;
}

// Range errors are reported at the offending value rather than later, when the
// position is gone.
double checked_real(const std::string& text, int line, int column, bool (*ok)(double),
                    const char* requirement) {
  const double value = parse_real(text, line, column);
  if (!ok(value)) throw ConfigError(std::string("value must be ") + requirement, line, column);
  return value;
}

bool is_criterion_key(const std::string& key) {
  if (key.size() < 2 || key[0] != 'f') return false;
  for (std::size_t i = 1; i < key.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(key[i]))) return false;
  }
  return key[1] != '0';
}

}  // namespace

ConfigError::ConfigError(const std::string& msg, int line, int column)
    : std::runtime_error(located(msg, line, column)), line_(line), column_(column) {}

Vector parse_vector(const std::string& text, int line, int column_offset) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
    values.push_back(parse_real(piece, line, column_offset + static_cast<int>(start) + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

RunConfig RunConfig::parse(std::istream& in) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::vector<std::pair<int, std::string>> criteria;  // index, text
  int first_criterion_line = 0;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t lead = 0;
    const std::string content = trim(raw, &lead);
    if (content.empty() || content[0] == '#') continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value'", line, static_cast<int>(lead) + 1);
    }
    const std::string key = trim(raw.substr(0, eq));
    std::size_t value_lead = 0;
    const std::string value_part = raw.substr(eq + 1);
    const std::string value = trim(value_part, &value_lead);
    const int value_col = static_cast<int>(eq + 1 + value_lead) + 1;
    const int key_col = static_cast<int>(lead) + 1;
    if (key.empty()) throw ConfigError("missing key", line, key_col);
    if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'", line, key_col);
    if (value.empty()) throw ConfigError("missing value for '" + key + "'", line, value_col);

    if (key == "problem") {
      if (value != "inline") {
        try {
          (void)get_problem(value);
        } catch (const std::out_of_range&) {
          throw ConfigError("unknown problem '" + value + "'", line, value_col);
        }
      }
      cfg.problem = value;
    } else if (key == "x0") {
      cfg.x0 = parse_vector(value, line, value_col - 1);
    } else if (key == "reference") {
      cfg.reference = parse_vector(value, line, value_col - 1);
    } else if (key == "beta") {
      cfg.solver.beta = checked_real(
          value, line, value_col, [](double b) { return b > 0.0 && b < 1.0; }, "in (0, 1)");
    } else if (key == "sigma") {
      cfg.solver.sigma = checked_real(
          value, line, value_col, [](double s) { return s >= 0.0 && s < 1.0; }, "in [0, 1)");
    } else if (key == "eps_critical") {
      cfg.solver.eps_critical =
          checked_real(value, line, value_col, [](double e) { return e > 0.0; }, "positive");
    } else if (key == "max_iter" || key == "max_j") {
      const long long v = parse_integer(value, line, value_col);
      if (v < 0 || v > 1'000'000'000) {
        throw ConfigError(key + " must lie in [0, 1e9]", line, value_col);
      }
      (key == "max_iter" ? cfg.solver.max_iter : cfg.solver.max_j) = static_cast<int>(v);
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "seed") {
      const long long s = parse_integer(value, line, value_col);
      if (s < 0) throw ConfigError("seed must be non-negative", line, value_col);
      cfg.seed = static_cast<std::uint64_t>(s);
    } else if (is_criterion_key(key)) {
      try {
        Expression::parse(value);
      } catch (const ExpressionError& e) {
        throw ConfigError(e.what(), line, value_col + e.column() - 1);
      }
      criteria.emplace_back(std::atoi(key.c_str() + 1), value);
      if (first_criterion_line == 0) first_criterion_line = line;
    } else {
      throw ConfigError("unknown key '" + key + "'", line, key_col);
    }
  }

  if (!criteria.empty() && !cfg.problem.empty() && cfg.problem != "inline") {
    throw ConfigError("criteria f1, f2, ... are only allowed with problem = inline",
                      first_criterion_line, 1);
  }
  std::sort(criteria.begin(), criteria.end());
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (criteria[i].first != static_cast<int>(i) + 1) {
      throw ConfigError("criteria must be numbered f1, f2, ... without gaps");
    }
    cfg.criteria.push_back(criteria[i].second);
  }
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in);
}

void RunConfig::validate() const {
  try {
    solver.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (problem.empty()) throw ConfigError("no problem given");
  if (problem == "inline") {
    if (criteria.empty()) throw ConfigError("inline problem needs at least f1");
    if (!x0) throw ConfigError("inline problem needs x0");
  } else if (!criteria.empty()) {
    throw ConfigError("criteria f1, f2, ... are only allowed with problem = inline");
  }
  const ResolvedProblem resolved = resolve_problem(*this);
  if (reference && reference->size() != resolved.problem.n()) {
    throw ConfigError("reference has the wrong dimension");
  }
}

ResolvedProblem resolve_problem(const RunConfig& cfg) {
  if (cfg.problem != "inline") {
    const ProblemDescriptor* d = nullptr;
    try {
      d = &get_problem(cfg.problem);
    } catch (const std::out_of_range& e) {
      throw ConfigError(e.what());
    }
    Vector x0 = cfg.x0 ? *cfg.x0 : d->recommended_x0;
    if (x0.size() != d->problem.n()) {
      throw ConfigError("x0 has length " + std::to_string(x0.size()) + ", problem '" +
                        cfg.problem + "' expects " + std::to_string(d->problem.n()));
    }
    return {cfg.problem, d->problem, std::move(x0)};
  }

  if (!cfg.x0) throw ConfigError("inline problem needs x0");
  const int n = static_cast<int>(cfg.x0->size());
  std::vector<Expression> exprs;
  for (const auto& text : cfg.criteria) {
    Expression e = Expression::parse(text);
    if (e.max_variable() > n) {
      throw ConfigError("criterion '" + text + "' uses x" + std::to_string(e.max_variable()) +
                        " but x0 has length " + std::to_string(n));
    }
    exprs.push_back(std::move(e));
  }
  const int m = static_cast<int>(exprs.size());
  MultiObjective problem(n, m, [exprs](const Vector& x) {
    Vector fx(static_cast<Eigen::Index>(exprs.size()));
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      fx[static_cast<Eigen::Index>(i)] = exprs[i].evaluate(x);
    }
    return fx;
  });
  return {"inline", std::move(problem), *cfg.x0};
}

}  // namespace msd
