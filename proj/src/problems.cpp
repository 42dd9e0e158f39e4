#include "weno/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "weno/euler.hpp"

namespace weno {

namespace {

using std::numbers::pi;

Eigen::VectorXd scalar(double v) { return Eigen::VectorXd::Constant(1, v); }

Eigen::VectorXd cons1(double rho, double u, double p, double gamma = 1.4) {
  Primitive1D w;
  w.rho = rho;
  w.vel(0) = u;
  w.p = p;
  return prim_to_cons(w, gamma);
}

Eigen::VectorXd cons2(double rho, double u, double v, double p, double gamma = 1.4) {
  PrimitiveState<double, 2> w;
  w.rho = rho;
  w.vel << u, v;
  w.p = p;
  return prim_to_cons(w, gamma);
}

Primitive1D prim1(double rho, double u, double p) {
  Primitive1D w;
  w.rho = rho;
  w.vel(0) = u;
  w.p = p;
  return w;
}

// wraps into [lo, hi)
double wrap(double x, double lo, double hi) {
  const double len = hi - lo;
  double r = std::fmod(x - lo, len);
  if (r < 0) r += len;
  return lo + r;
}

ProblemSpec scalar_problem(std::string name, std::string desc, Physics phys, int n,
                           double t_final, std::function<double(double)> u0, bool exact) {
  ProblemSpec s;
  s.name = std::move(name);
  s.description = std::move(desc);
  s.physics = phys;
  s.x = {-1.0, 1.0, n, true};
  s.t_final = t_final;
  s.bc = BoundarySpec::uniform(BcKind::Periodic, 1);
  s.profile = u0;
  s.ic = [u0](double x, double) { return scalar(u0(x)); };
  s.reference = exact ? ReferenceKind::ExactFunction : ReferenceKind::None;
  return s;
}

double composite(double x) {
  const double z = -0.7, delta = 0.005, beta = std::log(2.0) / (36 * delta * delta);
  const double a = 0.5, alpha = 10;
  auto G = [](double x, double b, double zz) { return std::exp(-b * (x - zz) * (x - zz)); };
  auto F = [](double x, double al, double aa) {
    return std::sqrt(std::max(1 - al * al * (x - aa) * (x - aa), 0.0));
  };
  if (x >= -0.8 && x <= -0.6)
    return (G(x, beta, z - delta) + 4 * G(x, beta, z) + G(x, beta, z + delta)) / 6;
  if (x >= -0.4 && x <= -0.2) return 1;
  if (x >= 0 && x <= 0.2) return 1 - std::abs(10 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6)
    return (F(x, alpha, a - delta) + 4 * F(x, alpha, a) + F(x, alpha, a + delta)) / 6;
  return 0;
}

ProblemSpec shock_tube(std::string name, std::string desc, Primitive1D l, Primitive1D r,
                       double t_final, double alpha_r) {
  ProblemSpec s;
  s.name = std::move(name);
  s.description = std::move(desc);
  s.physics = Physics::Euler1D;
  s.x = {-5.0, 5.0, 300, false};
  s.t_final = t_final;
  s.alpha_r = alpha_r;
  s.bc = BoundarySpec::uniform(BcKind::ZeroGradient, 1);
  s.bc.normal_component = {1, -1};
  s.reference = ReferenceKind::ExactRiemann;
  s.riemann = RiemannData{l, r, 0.0};
  const double g = s.gamma;
  // a node on the jump takes the right state
  s.ic = [l, r, g](double x, double) {
    const Primitive1D& w = x < 0 ? l : r;
    return cons1(w.rho, w.vel(0), w.p, g);
  };
  return s;
}

std::vector<ProblemSpec> build_catalog() {
  std::vector<ProblemSpec> c;

  c.push_back(scalar_problem("sin", "linear advection, u0 = sin(pi x)", Physics::LinearAdvection,
                             80, 1.0, [](double x) { return std::sin(pi * x); }, true));
  for (int k : {2, 3}) {
    c.push_back(scalar_problem(
        "gauss-k" + std::to_string(k),
        "linear advection, u0 = (x+1/2)^" + std::to_string(k) + " exp(-100 (x+1/2)^2)",
        Physics::LinearAdvection, 80, 1.0,
        [k](double x) {
          const double s = x + 0.5;
          return std::pow(s, k) * std::exp(-100 * s * s);
        },
        true));
  }
  c.push_back(critical_problem(false));
  c.push_back(scalar_problem("composite",
                             "linear advection of Gaussian, square, triangle and semi-ellipse",
                             Physics::LinearAdvection, 400, 6.3, composite, true));
  c.push_back(scalar_problem("burgers-sin", "Burgers, u0 = -sin(pi x)", Physics::Burgers, 200,
                             1.5, [](double x) { return -std::sin(pi * x); }, false));
  c.push_back(scalar_problem("burgers-shifted", "Burgers, u0 = 1/2 + sin(pi x)",
                             Physics::Burgers, 200, 0.55,
                             [](double x) { return 0.5 + std::sin(pi * x); }, false));

  c.push_back(shock_tube("sod", "Sod shock tube (dense gas on the right)",
                         prim1(0.125, 0, 0.1), prim1(1, 0, 1), 1.7, 50));
  c.push_back(shock_tube("lax", "Lax shock tube", prim1(0.445, 0.698, 3.528),
                         prim1(0.5, 0, 0.571), 1.3, 10));
  {
    ProblemSpec s = shock_tube("123", "123 problem (two receding rarefactions)",
                               prim1(1, -2, 0.4), prim1(1, 2, 0.4), 1.0, 50);
    s.symmetry = SymmetryKind::XMirror;
    // the node on x = 0 takes the mirror-symmetric state instead of the right one
    const auto outer = s.ic;
    s.ic = [outer](double x, double y) {
      return x == 0 ? cons1(1, 0, 0.4) : outer(x, y);
    };
    c.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "shu-osher";
    s.description = "Mach 3 shock meeting a sinusoidal density wave";
    s.physics = Physics::Euler1D;
    s.x = {-5.0, 5.0, 400, false};
    s.t_final = 1.8;
    s.bc = BoundarySpec::uniform(BcKind::ZeroGradient, 1);
    s.bc.normal_component = {1, -1};
    s.reference = ReferenceKind::FineGridJS;
    s.reference_n = 4000;
    s.ic = [](double x, double) {
      if (x < -4) return cons1(3.857143, 2.629369, 31.0 / 3.0);
      return cons1(1 + 0.2 * std::sin(5 * x), 0, 1);
    };
    c.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "blast";
    s.description = "two interacting blast waves between reflecting walls";
    s.physics = Physics::Euler1D;
    s.x = {0.0, 1.0, 801, false};
    s.t_final = 0.038;
    s.alpha_r = 10;
    s.bc = BoundarySpec::uniform(BcKind::Reflective, 1);
    s.bc.normal_component = {1, -1};
    s.reference = ReferenceKind::FineGridJS;
    s.reference_n = 4001;
    s.ic = [](double x, double) {
      if (x < 0.1) return cons1(1, 0, 1000);
      if (x < 0.9) return cons1(1, 0, 0.01);
      return cons1(1, 0, 100);
    };
    c.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "rt";
    s.description = "Rayleigh-Taylor instability, single-mode perturbation";
    s.physics = Physics::Euler2D;
    s.x = {-0.25, 0.25, 60, true};
    s.y = Axis{-0.75, 0.75, 180, false};
    s.paper_nx = 120;
    s.paper_ny = 360;
    s.t_final = 9.5;
    s.gravity = 0.1;
    s.bc[Side::XLo].kind = BcKind::Periodic;
    s.bc[Side::XHi].kind = BcKind::Periodic;
    s.bc[Side::YLo].kind = BcKind::Reflective;
    s.bc[Side::YHi].kind = BcKind::Reflective;
    s.bc.normal_component = {1, 2};
    s.symmetry = SymmetryKind::XMirror;
    const double g = s.gravity;
    s.ic = [g](double x, double y) {
      const double rho = y >= 0 ? 2.0 : 1.0;
      const double p = 2.5 - rho * g * y;
      const double v = 0.01 / 4 * (1 + std::cos(4 * pi * x)) * (1 + std::cos(4 * pi * y / 3));
      return cons2(rho, 0, v, p);
    };
    c.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "implosion";
    s.description = "implosion in a reflecting box";
    s.physics = Physics::Euler2D;
    s.x = {0.0, 1.0, 200, false};
    s.y = Axis{0.0, 1.0, 200, false};
    s.paper_nx = 400;
    s.paper_ny = 400;
    s.t_final = 5.0;
    s.alpha_r = 1;
    s.bc = BoundarySpec::uniform(BcKind::Reflective, 2);
    s.bc.normal_component = {1, 2};
    s.symmetry = SymmetryKind::Diagonal;
    s.ic = [](double x, double y) {
      // nodes on the diagonal x + y = 1/2 belong to the inner state
      if (x + y > 0.5 + 1e-12) return cons2(1, 0, 0, 1);
      return cons2(0.125, 0, 0, 0.14);
    };
    c.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "riemann2d";
    s.description = "2D Riemann problem, shocks 1-2 and 1-4, contacts 2-3 and 3-4";
    s.physics = Physics::Euler2D;
    s.x = {0.0, 1.0, 400, false};
    s.y = Axis{0.0, 1.0, 400, false};
    s.paper_nx = 1000;
    s.paper_ny = 1000;
    s.t_final = 0.25;
    s.bc = BoundarySpec::uniform(BcKind::ZeroGradient, 2);
    s.bc.normal_component = {1, 2};
    s.ic = [](double x, double y) {
      const bool right = x >= 0.5, top = y >= 0.5;
      if (right && top) return cons2(0.5313, 0, 0, 0.4);
      if (!right && top) return cons2(1, 0.7276, 0, 1);
      if (!right && !top) return cons2(0.8, 0, 0, 1);
      return cons2(1, 0, 0.7276, 1);
    };
    c.push_back(std::move(s));
  }
  {
    ProblemSpec s;
    s.name = "dmr";
    s.description = "double Mach reflection of a Mach 10 shock";
    s.physics = Physics::Euler2D;
    s.x = {0.0, 4.0, 480, false};
    s.y = Axis{0.0, 1.0, 120, false};
    s.paper_nx = 800;
    s.paper_ny = 200;
    s.t_final = 0.2;
    s.alpha_r = 10;
    s.bc = dmr_boundaries(s.gamma);
    const Eigen::VectorXd post = dmr_post_shock(s.gamma), pre = dmr_pre_shock(s.gamma);
    s.ic = [post, pre](double x, double y) {
      return x < 1.0 / 6.0 + y / std::tan(pi / 3) ? post : pre;
    };
    c.push_back(std::move(s));
  }
  return c;
}

}  // namespace

ProblemSpec critical_problem(bool positive_sine) {
  const double sign = positive_sine ? 1.0 : -1.0;
  return scalar_problem(
      "critical",
      positive_sine ? "linear advection, u0 = max(sin(pi x), 0)"
                    : "linear advection, u0 = max(-sin(pi x), 0)",
      Physics::LinearAdvection, 200, 2.4,
      [sign](double x) { return std::max(sign * std::sin(pi * x), 0.0); }, true);
}

const std::vector<ProblemSpec>& catalog() {
  static const std::vector<ProblemSpec> c = build_catalog();
  return c;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& s : catalog()) names.push_back(s.name);
  return names;
}

ProblemSpec find_problem(std::string_view name) {
  for (const auto& s : catalog())
    if (s.name == name) return s;
  std::ostringstream os;
  os << "unknown problem '" << name << "'; valid problems:";
  for (const auto& n : problem_names()) os << ' ' << n;
  throw ConfigError(os.str());
}

PdeSystem pde_system(const ProblemSpec& spec) {
  PdeSystem sys;
  sys.physics = spec.physics;
  sys.gamma = spec.gamma;
  sys.gravity = spec.gravity;
  return sys;
}

Grid make_grid(const ProblemSpec& spec, std::optional<int> n, std::optional<int> ny,
               bool paper_grid) {
  Grid g;
  g.x = spec.x;
  if (spec.y) g.y = spec.y;
  if (paper_grid && spec.paper_nx > 0) {
    g.x.n = spec.paper_nx;
    if (g.y) g.y->n = spec.paper_ny;
  }
  if (ny && !g.y) throw ConfigError("problem '" + spec.name + "' is 1D; --ny does not apply");
  if (n) {
    if (g.y && !ny) {
      const double aspect = static_cast<double>(g.y->n) / g.x.n;
      g.y->n = std::max(1, static_cast<int>(std::lround(*n * aspect)));
    }
    g.x.n = *n;
  }
  if (ny) g.y->n = *ny;
  g.validate();
  return g;
}

Field initial_field(const ProblemSpec& spec, const Grid& grid) {
  Field f(grid, components(spec.physics));
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.y ? grid.y->coord(j) : 0.0;
    for (int i = 0; i < grid.nx(); ++i) f.node(i, j) = spec.ic(grid.x.coord(i), y);
  }
  fill_ghosts(f, spec.bc, 0.0);
  return f;
}

Eigen::VectorXd exact_solution(const ProblemSpec& spec, double x, double t) {
  switch (spec.reference) {
    case ReferenceKind::ExactFunction:
      if (spec.physics == Physics::LinearAdvection && spec.profile)
        return scalar(spec.profile(wrap(x - t, spec.x.lo, spec.x.hi)));
      break;
    case ReferenceKind::ExactRiemann:
      if (spec.riemann) {
        const RiemannData& r = *spec.riemann;
        if (t <= 0) return spec.ic(x, 0);
        const Primitive1D w = ExactRiemann(r.left, r.right, spec.gamma).sample((x - r.x_jump) / t);
        return cons1(w.rho, w.vel(0), w.p, spec.gamma);
      }
      break;
    default:
      break;
  }
  throw UnsupportedReference("problem '" + spec.name + "' has no exact solution");
}

Field exact_field(const ProblemSpec& spec, const Grid& grid, double t) {
  if (spec.dim() != 1) throw UnsupportedReference("exact fields are 1D only");
  Field f(grid, components(spec.physics));
  for (int i = 0; i < grid.nx(); ++i) f.node(i) = exact_solution(spec, grid.x.coord(i), t);
  return f;
}

int reference_grid(const ProblemSpec& spec, int coarse_n) {
  const int stated = spec.reference_n > 0 ? spec.reference_n : 10 * coarse_n;
  return (stated + coarse_n - 1) / coarse_n * coarse_n;
}

Field reference_solution(const ProblemSpec& spec, const Grid& coarse, int fine_n, double t_final,
                         double cfl) {
  if (spec.dim() != 1) throw ConfigError("reference solutions are computed for 1D problems");
  if (fine_n % coarse.x.n != 0)
    throw ConfigError("reference grid must be an integer multiple of the run grid");
  const int ratio = fine_n / coarse.x.n;
  Grid fine = coarse;
  fine.x.n = fine_n;
  Field u = initial_field(spec, fine);
  StepControl ctl;
  ctl.cfl = cfl;
  ctl.t_final = t_final;
  SchemeConfig cfg = SchemeConfig::defaults(Scheme::JS);
  evolve(u, spec.bc, cfg, pde_system(spec), ctl);
  Field out(coarse, u.m());
  for (int i = 0; i < coarse.nx(); ++i) out.node(i) = u.node(i * ratio);
  fill_ghosts(out, spec.bc, t_final);
  return out;
}

}  // namespace weno
