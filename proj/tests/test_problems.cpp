#include <doctest.h>

#include <cmath>
#include <set>

#include "weno/euler.hpp"
#include "weno/problems.hpp"

using namespace weno;

namespace {

bool is_euler(Physics p) { return p == Physics::Euler1D || p == Physics::Euler2D; }

}  // namespace

TEST_CASE("catalog vocabulary") {
  const std::vector<std::string> expect = {
      "sin",  "gauss-k2", "gauss-k3",  "critical", "composite", "burgers-sin",
      "burgers-shifted", "sod", "lax", "123",     "shu-osher", "blast",
      "rt",   "implosion", "riemann2d", "dmr"};
  CHECK(problem_names() == expect);
  const std::set<std::string> unique(expect.begin(), expect.end());
  CHECK(unique.size() == catalog().size());
  CHECK_THROWS_WITH_AS(find_problem("sodd"), doctest::Contains("riemann2d"), ConfigError);
}

TEST_CASE("run lengths, grids and alpha_R") {
  struct Row {
    const char* name;
    double t;
    int n;
    double alpha_r;
  };
  const Row rows[] = {{"sin", 1.0, 80, 50},         {"critical", 2.4, 200, 50},
                      {"composite", 6.3, 400, 50},  {"burgers-sin", 1.5, 200, 50},
                      {"burgers-shifted", 0.55, 200, 50}, {"sod", 1.7, 300, 50},
                      {"lax", 1.3, 300, 10},        {"123", 1.0, 300, 50},
                      {"shu-osher", 1.8, 400, 50},  {"blast", 0.038, 801, 10},
                      {"rt", 9.5, 60, 50},          {"implosion", 5.0, 200, 1},
                      {"riemann2d", 0.25, 400, 50}, {"dmr", 0.2, 480, 10}};
  for (const Row& r : rows) {
    CAPTURE(r.name);
    const ProblemSpec s = find_problem(r.name);
    CHECK(s.t_final == r.t);
    CHECK(s.x.n == r.n);
    CHECK(s.alpha_r == r.alpha_r);
  }
  CHECK(find_problem("rt").paper_nx == 120);
  CHECK(find_problem("rt").paper_ny == 360);
  CHECK(find_problem("implosion").paper_nx == 400);
  CHECK(find_problem("dmr").paper_nx == 800);
  CHECK(find_problem("dmr").paper_ny == 200);
  CHECK(find_problem("riemann2d").paper_ny == 1000);
}

TEST_CASE("sod initial data") {
  const ProblemSpec s = find_problem("sod");
  CHECK(s.reference == ReferenceKind::ExactRiemann);
  const auto l = cons_to_prim<double, 1>(ConservedState<double, 1>(s.ic(-1, 0)), 1.4);
  const auto r = cons_to_prim<double, 1>(ConservedState<double, 1>(s.ic(1, 0)), 1.4);
  CHECK(l.rho == 0.125);
  CHECK(l.p == doctest::Approx(0.1));
  CHECK(r.rho == 1);
  CHECK(r.p == doctest::Approx(1));
  // a node on the jump takes the right state
  CHECK(s.ic(0, 0) == s.ic(1, 0));
}

TEST_CASE("123 initial data is mirror-symmetric") {
  const ProblemSpec s = find_problem("123");
  const Field f = initial_field(s, make_grid(s));
  CHECK(symmetry_error_components(f, SymmetryKind::XMirror, Physics::Euler1D).maxCoeff() == 0);
  const auto mid = cons_to_prim<double, 1>(ConservedState<double, 1>(s.ic(0, 0)), 1.4);
  CHECK(mid.vel(0) == 0);
  CHECK(mid.p == doctest::Approx(0.4));
}

TEST_CASE("composite profile") {
  const ProblemSpec s = find_problem("composite");
  const auto u = [&](double x) { return s.ic(x, 0)(0); };
  for (double x = -1; x <= 1; x += 1e-3) {
    const bool inside = (x >= -0.8 && x <= -0.6) || (x >= -0.4 && x <= -0.2) ||
                        (x >= 0 && x <= 0.2) || (x >= 0.4 && x <= 0.6);
    if (!inside) CHECK(u(x) == 0);
  }
  CHECK(u(-0.3) == 1);
  CHECK(u(0.1) == doctest::Approx(1));
  CHECK(u(0.05) == doctest::Approx(0.5));

  // Gaussian bump: beta = log 2 / (36 delta^2)
  const double delta = 0.005, beta = std::log(2.0) / (36 * delta * delta);
  const auto G = [&](double x, double z) { return std::exp(-beta * (x - z) * (x - z)); };
  const double x0 = -0.68;
  CHECK(u(x0) == doctest::Approx((G(x0, -0.705) + 4 * G(x0, -0.7) + G(x0, -0.695)) / 6));

  // semi-ellipse at its centre: F = sqrt(1 - 100 (x - a)^2)
  const double f = (2 * std::sqrt(1 - 100 * delta * delta) + 4) / 6;
  CHECK(u(0.5) == doctest::Approx(f));
}

TEST_CASE("rayleigh-taylor initial data") {
  const ProblemSpec s = find_problem("rt");
  CHECK(s.gravity == 0.1);
  CHECK(s.symmetry == SymmetryKind::XMirror);
  CHECK(s.bc[Side::XLo].kind == BcKind::Periodic);
  CHECK(s.bc[Side::YLo].kind == BcKind::Reflective);
  for (double y : {-0.6, -0.2, 0.0, 0.3, 0.7}) {
    const auto w = cons_to_prim<double, 2>(ConservedState<double, 2>(s.ic(0.1, y)), 1.4);
    CHECK(w.rho == (y >= 0 ? 2.0 : 1.0));
    CHECK(w.p == doctest::Approx(2.5 - w.rho * 0.1 * y));
    CHECK(w.vel(0) == 0);
    CHECK(w.vel(1) == doctest::Approx(0.0025 * (1 + std::cos(0.4 * M_PI)) *
                                      (1 + std::cos(4 * M_PI * y / 3))));
  }
  // dp/dy = -rho g on either side of the interface
  const double h = 1e-3;
  for (double y : {-0.5, 0.5}) {
    const auto p = [&](double yy) {
      return cons_to_prim<double, 2>(ConservedState<double, 2>(s.ic(0, yy)), 1.4).p;
    };
    const double rho = y > 0 ? 2 : 1;
    CHECK((p(y + h) - p(y - h)) / (2 * h) == doctest::Approx(-rho * 0.1).epsilon(1e-8));
  }
}

TEST_CASE("initial fields are physical") {
  for (const auto& s : catalog()) {
    CAPTURE(s.name);
    const Grid g = make_grid(s);
    const Field f = initial_field(s, g);
    CHECK(f.data.allFinite());
    if (!is_euler(s.physics)) continue;
    bool ok = true;
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < g.nx(); ++i) {
        const Eigen::VectorXd u = f.node(i, j);
        try {
          if (s.physics == Physics::Euler1D)
            cons_to_prim<double, 1>(ConservedState<double, 1>(u), s.gamma);
          else
            cons_to_prim<double, 2>(ConservedState<double, 2>(u), s.gamma);
        } catch (const DomainError&) {
          ok = false;
        }
      }
    CHECK(ok);
  }
}

TEST_CASE("critical profile and its sign flip") {
  const ProblemSpec neg = find_problem("critical");
  const ProblemSpec pos = critical_problem(true);
  CHECK(neg.ic(-0.5, 0)(0) == doctest::Approx(1));
  CHECK(neg.ic(0.5, 0)(0) == 0);
  CHECK(pos.ic(0.5, 0)(0) == doctest::Approx(1));
  CHECK(pos.ic(-0.5, 0)(0) == 0);
}

TEST_CASE("exact translation") {
  const ProblemSpec s = find_problem("sin");
  for (double x : {-0.9, -0.3, 0.0, 0.45, 0.99}) {
    CHECK(exact_solution(s, x, 2.0)(0) == doctest::Approx(std::sin(M_PI * x)).scale(1));
    CHECK(exact_solution(s, x, 1.0)(0) == doctest::Approx(-std::sin(M_PI * x)).scale(1));
  }
  const ProblemSpec c = find_problem("composite");
  for (double x = -1; x < 1; x += 0.01)
    CHECK(exact_solution(c, x, 2.0)(0) == doctest::Approx(c.ic(x, 0)(0)));
}

TEST_CASE("exact Riemann reference") {
  const ProblemSpec s = find_problem("sod");
  const ExactRiemann rp(s.riemann->left, s.riemann->right, 1.4);
  const Eigen::VectorXd u = exact_solution(s, 0, 1.7);
  CHECK(u(0) == doctest::Approx(rp.star_density_right()));
  CHECK(u(0) == doctest::Approx(0.42632).epsilon(1e-4));
  CHECK(exact_solution(s, -4.9, 1.7)(0) == 0.125);
  CHECK(exact_solution(s, 4.9, 1.7)(0) == 1);
}

TEST_CASE("unsupported references") {
  CHECK_THROWS_AS(exact_solution(find_problem("burgers-sin"), 0, 0.5), UnsupportedReference);
  CHECK_THROWS_AS(exact_solution(find_problem("shu-osher"), 0, 0.5), UnsupportedReference);
  const ProblemSpec rt = find_problem("rt");
  CHECK_THROWS_AS(exact_field(rt, make_grid(rt), 1), UnsupportedReference);
}

TEST_CASE("reference grids") {
  CHECK(reference_grid(find_problem("blast"), 801) == 4005);
  CHECK(reference_grid(find_problem("shu-osher"), 400) == 4000);
  CHECK(reference_grid(find_problem("shu-osher"), 200) == 4000);
  CHECK(reference_grid(find_problem("shu-osher"), 300) == 4200);

  // a reference on the run grid is the run itself
  ProblemSpec s = find_problem("shu-osher");
  const Grid g = make_grid(s, 100);
  const Field ref = reference_solution(s, g, 100, 0.05);
  Field run = initial_field(s, g);
  StepControl ctl;
  ctl.t_final = 0.05;
  evolve(run, s.bc, SchemeConfig::defaults(Scheme::JS), pde_system(s), ctl);
  CHECK(ref.interior() == run.interior());
  CHECK_THROWS_AS(reference_solution(s, g, 150, 0.05), ConfigError);
}

TEST_CASE("grid overrides") {
  const ProblemSpec sod = find_problem("sod");
  CHECK(make_grid(sod).x.n == 300);
  CHECK(make_grid(sod, 600).x.n == 600);
  CHECK_THROWS_AS(make_grid(sod, 300, 50), ConfigError);

  const ProblemSpec rt = find_problem("rt");
  const Grid a = make_grid(rt, 30);
  CHECK(a.y->n == 90);
  const Grid b = make_grid(rt, {}, {}, true);
  CHECK(b.x.n == 120);
  CHECK(b.y->n == 360);
  const Grid c = make_grid(rt, 20, 40);
  CHECK(c.y->n == 40);
}
