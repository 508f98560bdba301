#include "msd/problems.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace msd {

const char* to_string(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::convex: return "convex";
    case ConvexityClass::pseudo_convex: return "pseudo-convex";
    case ConvexityClass::quasi_convex: return "quasi-convex";
    case ConvexityClass::none: return "none";
  }
  return "unknown";
}

namespace {

double distance_to_segment(const Vector& x, const Vector& a, const Vector& b) {
  const Vector ab = b - a;
  const double s = std::clamp((x - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
  return (x - (a + s * ab)).norm();
}

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

ProblemDescriptor paper_cubic() {
  MultiObjective problem(
      1, 2,
      [](const Vector& x) {
        const double t = x[0];
        return vec2(t, -t * t * t / 3.0);
      },
      [](const Vector& x) {
        Matrix jac(2, 1);
        jac << 1.0, -x[0] * x[0];
        return jac;
      });
  ProblemDescriptor d{"paper_cubic", std::move(problem), ConvexityClass::pseudo_convex,
                      [](const Vector&, double) { return true; },
                      [](oracle::SampleStream& rng) {
                        Vector x(1);
                        x[0] = rng.uniform(-10.0, 10.0);
                        return x;
                      },
                      Vector::Constant(1, 5.0), oracle::Box{}, ""};
  d.description = "H(t) = (t, -t^3/3): every point is Pareto critical and weak Pareto optimal";
  return d;
}

// f1 = sqrt(1 + ||x - c1||^2) - 1 is convex; f2 = 1 - exp(-||x - c2||^2 / 2) is
// an increasing concave transform of a convex function, quasi-convex but not
// convex. Both depend on x only through the distance to their center, so the
// critical set is the segment [c1, c2].
ProblemDescriptor quasi_exp() {
  const Vector c1 = vec2(0.0, 0.0);
  const Vector c2 = vec2(2.0, 1.0);
  MultiObjective problem(
      2, 2,
      [c1, c2](const Vector& x) {
        return vec2(std::sqrt(1.0 + (x - c1).squaredNorm()) - 1.0,
                    1.0 - std::exp(-0.5 * (x - c2).squaredNorm()));
      },
      [c1, c2](const Vector& x) {
        Matrix jac(2, 2);
        jac.row(0) = (x - c1).transpose() / std::sqrt(1.0 + (x - c1).squaredNorm());
        jac.row(1) = (x - c2).transpose() * std::exp(-0.5 * (x - c2).squaredNorm());
        return jac;
      });
  ProblemDescriptor d{"quasi_exp",
                      std::move(problem),
                      ConvexityClass::quasi_convex,
                      [c1, c2](const Vector& x, double tol) {
                        return distance_to_segment(x, c1, c2) <= tol;
                      },
                      [c1, c2](oracle::SampleStream& rng) -> Vector {
                        return c1 + rng.uniform() * (c2 - c1);
                      },
                      vec2(3.0, -1.0),
                      oracle::Box{},
                      ""};
  d.description = "(sqrt(1+|x-c1|^2)-1, 1-exp(-|x-c2|^2/2)), c1=(0,0), c2=(2,1)";
  return d;
}

ProblemDescriptor scalar_quad() {
  MultiObjective problem(
      2, 1,
      [](const Vector& x) { return Vector::Constant(1, 0.5 * x.squaredNorm()); },
      [](const Vector& x) { return Matrix(x.transpose()); });
  ProblemDescriptor d{"scalar_quad",
                      std::move(problem),
                      ConvexityClass::convex,
                      [](const Vector& x, double tol) { return x.norm() <= tol; },
                      [](oracle::SampleStream&) -> Vector { return Vector::Zero(2); },
                      vec2(1.0, -2.0),
                      oracle::Box{},
                      ""};
  d.description = "f(x) = 1/2 ||x||^2, a single criterion";
  return d;
}

// f1 = (x1^2 - 1)^2 + x2^2, f2 = (x1^2 - 1)^2 + (x2 - 1)^2. Critical iff
// x1 in {-1, 0, 1} and 0 <= x2 <= 1; the x1 = 0 branch is not Pareto optimal.
ProblemDescriptor nonconvex_demo() {
  MultiObjective problem(
      2, 2,
      [](const Vector& x) {
        const double well = (x[0] * x[0] - 1.0) * (x[0] * x[0] - 1.0);
        return vec2(well + x[1] * x[1], well + (x[1] - 1.0) * (x[1] - 1.0));
      },
      [](const Vector& x) {
        const double dwell = 4.0 * x[0] * (x[0] * x[0] - 1.0);
        Matrix jac(2, 2);
        jac << dwell, 2.0 * x[1], dwell, 2.0 * (x[1] - 1.0);
        return jac;
      });
  ProblemDescriptor d{"nonconvex_demo",
                      std::move(problem),
                      ConvexityClass::none,
                      [](const Vector& x, double tol) {
                        double best = std::numeric_limits<double>::infinity();
                        for (double c : {-1.0, 0.0, 1.0}) {
                          best = std::min(best, distance_to_segment(x, vec2(c, 0.0), vec2(c, 1.0)));
                        }
                        return best <= tol;
                      },
                      [](oracle::SampleStream& rng) -> Vector {
                        const double branch = std::floor(rng.uniform() * 3.0) - 1.0;
                        return vec2(branch, rng.uniform());
                      },
                      vec2(0.3, 2.0),
                      oracle::Box{-2.0, 2.0},
                      ""};
  d.description = "double-well pair with three critical segments x1 in {-1,0,1}, 0<=x2<=1";
  return d;
}

std::map<std::string, ProblemDescriptor> build_registry() {
  std::map<std::string, ProblemDescriptor> reg;
  for (auto d : {make_quad_pair(vec2(0.0, 0.0), vec2(1.0, 0.0)), paper_cubic(), quasi_exp(),
                 scalar_quad(), nonconvex_demo()}) {
    reg.emplace(d.name, std::move(d));
  }
  return reg;
}

}  // namespace

ProblemDescriptor make_quad_pair(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.size() == 0) {
    throw DimensionError("make_quad_pair: centers must have equal, positive length");
  }
  const int n = static_cast<int>(a.size());
  MultiObjective problem(
      n, 2,
      [a, b](const Vector& x) {
        return vec2(0.5 * (x - a).squaredNorm(), 0.5 * (x - b).squaredNorm());
      },
      [a, b, n](const Vector& x) {
        Matrix jac(2, n);
        jac.row(0) = (x - a).transpose();
        jac.row(1) = (x - b).transpose();
        return jac;
      });
  Vector x0 = Vector::Constant(n, 2.0);
  ProblemDescriptor d{"quad_pair",
                      std::move(problem),
                      ConvexityClass::convex,
                      [a, b](const Vector& x, double tol) {
                        return distance_to_segment(x, a, b) <= tol;
                      },
                      [a, b](oracle::SampleStream& rng) -> Vector {
                        return a + rng.uniform() * (b - a);
                      },
                      x0,
                      oracle::Box{},
                      ""};
  d.description = "(1/2 |x-a|^2, 1/2 |x-b|^2)";
  return d;
}

const ProblemDescriptor& get_problem(const std::string& name) {
  static const std::map<std::string, ProblemDescriptor> registry = build_registry();
  const auto it = registry.find(name);
  if (it == registry.end()) {
    throw std::out_of_range("unknown problem '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> problem_names() {
  return {"nonconvex_demo", "paper_cubic", "quad_pair", "quasi_exp", "scalar_quad"};
}

}  // namespace msd
