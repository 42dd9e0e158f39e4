#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "weno/euler.hpp"
#include "weno/integrator.hpp"

using namespace weno;

namespace {

const Scheme kAll[] = {Scheme::JS, Scheme::Z, Scheme::NW6, Scheme::CU6, Scheme::Theta6};

Grid line(double lo, double hi, int n, bool periodic) {
  Grid g;
  g.x = {lo, hi, n, periodic};
  g.validate();
  return g;
}

Grid plane(Axis x, Axis y) {
  Grid g;
  g.x = x;
  g.y = y;
  g.validate();
  return g;
}

template <typename F>
Field sampled(const Grid& g, int m, F f) {
  Field u(g, m);
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i)
      u.node(i, j) = f(g.x.coord(i), g.y ? g.y->coord(j) : 0.0);
  return u;
}

Eigen::VectorXd euler2(double rho, double u, double v, double p) {
  PrimitiveState<double, 2> w;
  w.rho = rho;
  w.vel << u, v;
  w.p = p;
  return prim_to_cons(w, 1.4);
}

Eigen::VectorXd euler1(double rho, double u, double p) {
  PrimitiveState<double, 1> w;
  w.rho = rho;
  w.vel << u;
  w.p = p;
  return prim_to_cons(w, 1.4);
}

Eigen::VectorXd scalar(double v) { return Eigen::VectorXd::Constant(1, v); }

double slope(double h1, double e1, double h2, double e2) {
  return std::log(e1 / e2) / std::log(h1 / h2);
}

}  // namespace

TEST_CASE("physics metadata") {
  CHECK(components(Physics::LinearAdvection) == 1);
  CHECK(components(Physics::Burgers) == 1);
  CHECK(components(Physics::Euler1D) == 3);
  CHECK(components(Physics::Euler2D) == 4);
  CHECK(dimension(Physics::Euler2D) == 2);
  CHECK(dimension(Physics::Euler1D) == 1);
}

TEST_CASE("constant fields have zero right-hand side") {
  for (Scheme s : kAll) {
    const SchemeConfig cfg = SchemeConfig::defaults(s);
    {
      const Grid g = line(-1, 1, 20, true);
      Field u = sampled(g, 1, [](double, double) { return scalar(0.7); });
      Field d;
      const BoundarySpec bc = BoundarySpec::uniform(BcKind::Periodic, 1);
      rhs(u, bc, cfg, {Physics::LinearAdvection}, 0, d);
      CHECK(d.interior().cwiseAbs().maxCoeff() <= 1e-13);
      rhs(u, bc, cfg, {Physics::Burgers}, 0, d);
      CHECK(d.interior().cwiseAbs().maxCoeff() <= 1e-13);
    }
    {
      const Grid g = line(0, 1, 20, false);
      Field u = sampled(g, 3, [](double, double) { return euler1(1.3, 0.4, 2.0); });
      Field d;
      rhs(u, BoundarySpec::uniform(BcKind::ZeroGradient, 1), cfg, {Physics::Euler1D}, 0, d);
      CHECK(d.interior().cwiseAbs().maxCoeff() <= 1e-13);
    }
    {
      const Grid g = plane({0, 1, 12, true}, {0, 1, 10, false});
      Field u = sampled(g, 4, [](double, double) { return euler2(0.9, -0.3, 0.6, 1.5); });
      Field d;
      BoundarySpec bc = BoundarySpec::uniform(BcKind::ZeroGradient, 2);
      bc[Side::XLo].kind = bc[Side::XHi].kind = BcKind::Periodic;
      rhs(u, bc, cfg, {Physics::Euler2D}, 0, d);
      CHECK(d.interior().cwiseAbs().maxCoeff() <= 1e-13);
    }
  }
}

TEST_CASE("advection right-hand side is sixth order for Theta6") {
  const SchemeConfig cfg = SchemeConfig::defaults(Scheme::Theta6);
  const BoundarySpec bc = BoundarySpec::uniform(BcKind::Periodic, 1);
  std::vector<double> h, e;
  for (int n : {20, 40, 80, 160}) {
    const Grid g = line(-1, 1, n, true);
    Field u = sampled(g, 1, [](double x, double) { return scalar(std::sin(M_PI * x)); });
    Field d;
    rhs(u, bc, cfg, {Physics::LinearAdvection}, 0, d);
    double err = 0;
    for (int i = 0; i < g.nx(); ++i)
      err = std::max(err, std::abs(d.node(i)(0) + M_PI * std::cos(M_PI * g.x.coord(i))));
    h.push_back(g.x.dx());
    e.push_back(err);
  }
  CHECK(slope(h[2], e[2], h[3], e[3]) >= 5.5);
}

TEST_CASE("periodic right-hand side telescopes") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u01(-1, 1);
  const Grid g = line(-1, 1, 64, true);
  for (Scheme s : kAll) {
    for (Physics p : {Physics::LinearAdvection, Physics::Burgers}) {
      Field u = sampled(g, 1, [&](double, double) { return scalar(u01(rng)); });
      Field d;
      rhs(u, BoundarySpec::uniform(BcKind::Periodic, 1), SchemeConfig::defaults(s), {p}, 0, d);
      const Eigen::MatrixXd in = d.interior();
      CHECK(std::abs(in.sum()) <= 1e-12 * in.cwiseAbs().sum());
    }
  }
}

TEST_CASE("wave speed bounds") {
  const Grid g = line(-1, 1, 20, true);
  Field a = sampled(g, 1, [](double x, double) { return scalar(std::sin(M_PI * x)); });
  const WaveSpeeds adv = max_wave_speed(a, {Physics::LinearAdvection});
  CHECK(adv.overall[0] == 1);
  const WaveSpeeds bur = max_wave_speed(a, {Physics::Burgers});
  CHECK(bur.overall[0] == doctest::Approx(1));

  const Grid s = line(-5, 5, 10, false);
  Field sod = sampled(s, 3, [](double x, double) {
    return x < 0 ? euler1(0.125, 0, 0.1) : euler1(1, 0, 1);
  });
  const WaveSpeeds ws = max_wave_speed(sod, {Physics::Euler1D});
  CHECK(ws.overall[0] == doctest::Approx(std::sqrt(1.4)));
  CHECK(ws.family[0].size() == 3);
  CHECK(ws.family[0](1) == 0);

  sod.node(4)(2) = -1;
  CHECK_THROWS_WITH_AS(max_wave_speed(sod, {Physics::Euler1D}), doctest::Contains("4"),
                       DomainError);
}

TEST_CASE("time step laws") {
  const Grid g = line(0, 1, 10, false);
  WaveSpeeds ws;
  ws.overall = {2, 0};
  StepControl ctl;
  ctl.cfl = 0.5;
  ctl.t_final = 10;
  CHECK(compute_dt(ws, g, ctl, 0) == doctest::Approx(0.025));

  const Grid p = line(0, 1, 40, true);
  StepControl fixed;
  fixed.law = DtLaw::FixedPower;
  fixed.power = 2;
  fixed.t_final = 1;
  CHECK(compute_dt(ws, p, fixed, 0) == doctest::Approx(1.0 / 1600));

  // clipping onto t_final
  ctl.t_final = 1;
  CHECK(compute_dt(ws, g, ctl, 0.99) == doctest::Approx(0.01));
  CHECK(compute_dt(ws, g, ctl, 1 - 0.025 * (1 + 1e-12)) == doctest::Approx(0.025));

  const Grid q = plane({0, 1, 10, false}, {0, 2, 10, false});
  ws.overall = {1, 2};
  ctl.t_final = 10;
  CHECK(compute_dt(ws, q, ctl, 0) == doctest::Approx(0.5 / (1 / 0.1 + 2 / 0.2)));

  ws.overall = {0, 0};
  CHECK_THROWS_AS(compute_dt(ws, g, ctl, 0), ConfigError);

  StepControl bad;
  bad.cfl = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad.cfl = 0.5;
  bad.t_final = -1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("gravity source") {
  const Grid g = plane({0, 1, 4, false}, {0, 1, 4, false});
  Field u = sampled(g, 4, [](double, double) { return euler2(2, 0, 1, 1); });
  Field d(g, 4);
  add_gravity_source(u, 0.1, d);
  CHECK(d.node(1, 1)(2) == doctest::Approx(-0.2));
  CHECK(d.node(1, 1)(3) == doctest::Approx(-0.2));
  CHECK(d.node(1, 1)(0) == 0);

  Field r = sampled(g, 4, [](double, double) { return euler2(2, 0, 0, 1); });
  Field e(g, 4);
  add_gravity_source(r, 0.1, e);
  CHECK(e.node(2, 2)(3) == 0);
  CHECK(e.node(2, 2)(2) == doctest::Approx(-0.2));

  Field z(g, 4);
  add_gravity_source(u, 0.0, z);
  CHECK(z.data.isZero());
}

TEST_CASE("extruded 1D data gives the 1D right-hand side") {
  const auto prim = [](double x) {
    return std::array<double, 3>{1 + 0.2 * std::sin(M_PI * x), 0.5 + 0.1 * std::cos(M_PI * x),
                                 1 + 0.3 * std::sin(2 * M_PI * x)};
  };
  for (Scheme s : kAll) {
    const SchemeConfig cfg = SchemeConfig::defaults(s);
    const Grid g1 = line(-1, 1, 40, true);
    Field u1 = sampled(g1, 3, [&](double x, double) {
      const auto w = prim(x);
      return euler1(w[0], w[1], w[2]);
    });
    Field d1;
    rhs(u1, BoundarySpec::uniform(BcKind::Periodic, 1), cfg, {Physics::Euler1D}, 0, d1);

    const Grid g2 = plane({-1, 1, 40, true}, {0, 1, 8, true});
    Field u2 = sampled(g2, 4, [&](double x, double) {
      const auto w = prim(x);
      return euler2(w[0], w[1], 0, w[2]);
    });
    Field d2;
    rhs(u2, BoundarySpec::uniform(BcKind::Periodic, 2), cfg, {Physics::Euler2D}, 0, d2);

    double err = 0;
    for (int j = 0; j < g2.ny(); ++j)
      for (int i = 0; i < g2.nx(); ++i) {
        const auto a = d2.node(i, j);
        const auto b = d1.node(i);
        err = std::max({err, std::abs(a(0) - b(0)), std::abs(a(1) - b(1)), std::abs(a(2)),
                        std::abs(a(3) - b(2))});
      }
    INFO(scheme_name(s));
    CHECK(err <= 1e-12);
  }
}

TEST_CASE("transposed field gives the transposed right-hand side") {
  const Grid g = plane({0, 1, 24, true}, {0, 1, 24, true});
  const auto f = [](double x, double y) {
    return euler2(1 + 0.3 * std::sin(2 * M_PI * x) * std::cos(2 * M_PI * y) + 0.1 * std::sin(2 * M_PI * y),
                  0.2 * std::cos(2 * M_PI * (x + 2 * y)), -0.1 * std::sin(2 * M_PI * x),
                  1 + 0.2 * std::cos(2 * M_PI * (x - y)));
  };
  for (Scheme s : kAll) {
    Field u = sampled(g, 4, f);
    Field t = sampled(g, 4, [&](double x, double y) {
      Eigen::VectorXd v = f(y, x);
      std::swap(v(1), v(2));
      return v;
    });
    Field du, dt;
    const BoundarySpec bc = BoundarySpec::uniform(BcKind::Periodic, 2);
    const SchemeConfig cfg = SchemeConfig::defaults(s);
    rhs(u, bc, cfg, {Physics::Euler2D}, 0, du);
    rhs(t, bc, cfg, {Physics::Euler2D}, 0, dt);
    double err = 0, scale = 0;
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < g.nx(); ++i) {
        Eigen::VectorXd a = du.node(i, j);
        std::swap(a(1), a(2));
        err = std::max(err, (a - dt.node(j, i)).cwiseAbs().maxCoeff());
        scale = std::max(scale, a.cwiseAbs().maxCoeff());
      }
    INFO(scheme_name(s));
    CHECK(err == 0);
    CHECK(scale > 0);
  }
}

TEST_CASE("hydrostatic column is balanced away from the interface") {
  const double g = 0.1;
  for (int ny : {60, 120}) {
    const Grid gr = plane({-0.25, 0.25, ny / 6, true}, {-0.75, 0.75, ny, false});
    Field u = sampled(gr, 4, [&](double, double y) {
      const double rho = y >= 0 ? 2.0 : 1.0;
      return euler2(rho, 0, 0, 2.5 - rho * g * y);
    });
    BoundarySpec bc = BoundarySpec::uniform(BcKind::Reflective, 2);
    bc[Side::XLo].kind = bc[Side::XHi].kind = BcKind::Periodic;
    bc.normal_component = {1, 2};
    Field d;
    rhs(u, bc, SchemeConfig::defaults(Scheme::Theta6), {Physics::Euler2D, 1.4, g}, 0, d);
    const int mid = ny / 2;  // y = 0
    double worst = 0;
    for (int j = 0; j < gr.ny(); ++j) {
      if (std::abs(j - mid) <= 3 || j <= 3 || j >= gr.ny() - 4) continue;
      for (int i = 0; i < gr.nx(); ++i) worst = std::max(worst, d.node(i, j).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= std::pow(gr.y->dx(), 5));
  }
}

TEST_CASE("Runge-Kutta algebra") {
  Eigen::MatrixXd u = Eigen::MatrixXd::Constant(2, 3, 1.5);
  const Eigen::MatrixXd u0 = u;
  rk3_advance(u, 0, 0.1, [](Eigen::MatrixXd&, double, Eigen::MatrixXd& k) { k.setZero(); });
  CHECK(u == u0);
  rk3_advance(u, 0, 0.25, [](Eigen::MatrixXd&, double, Eigen::MatrixXd& k) { k.setConstant(2); });
  CHECK((u.array() - 2.0).abs().maxCoeff() <= 1e-15);

  std::vector<double> seen;
  Eigen::MatrixXd v = u0;
  rk3_advance(v, 1.0, 0.5, [&](Eigen::MatrixXd&, double t, Eigen::MatrixXd& k) {
    seen.push_back(t);
    k.setZero();
  });
  CHECK(seen == std::vector<double>{1.0, 1.5, 1.25});
}

TEST_CASE("Runge-Kutta temporal order") {
  std::vector<double> err;
  const std::vector<double> dts = {0.1, 0.05, 0.025, 0.0125};
  for (double dt : dts) {
    Eigen::MatrixXd u = Eigen::MatrixXd::Constant(1, 1, 1.0);
    const int steps = static_cast<int>(std::lround(1 / dt));
    for (int n = 0; n < steps; ++n)
      rk3_advance(u, n * dt, dt, [](Eigen::MatrixXd& s, double, Eigen::MatrixXd& k) { k = -s; });
    err.push_back(std::abs(u(0, 0) - std::exp(-1.0)));
  }
  for (std::size_t i = 1; i < err.size(); ++i)
    CHECK(slope(dts[i - 1], err[i - 1], dts[i], err[i]) == doctest::Approx(3.0).epsilon(0.1 / 3));
}

TEST_CASE("TVD Runge-Kutta keeps an upwind scheme total-variation diminishing") {
  const int n = 100;
  const double dx = 1.0 / n, dt = 0.9 * dx;
  Eigen::MatrixXd u(1, n);
  for (int i = 0; i < n; ++i) u(0, i) = (i > 20 && i < 50) ? 1.0 : (i > 70 ? 0.5 : 0.0);
  const auto tv = [&](const Eigen::MatrixXd& s) {
    double t = 0;
    for (int i = 0; i < n; ++i) t += std::abs(s(0, (i + 1) % n) - s(0, i));
    return t;
  };
  const auto upwind = [&](Eigen::MatrixXd& s, double, Eigen::MatrixXd& k) {
    for (int i = 0; i < n; ++i) k(0, i) = -(s(0, i) - s(0, (i + n - 1) % n)) / dx;
  };
  double prev = tv(u);
  for (int step = 0; step < 200; ++step) {
    rk3_advance(u, 0, dt, upwind);
    const double now = tv(u);
    CHECK(now <= prev + 1e-13);
    prev = now;
  }
}

TEST_CASE("periodic scalar runs conserve the total") {
  const Grid g = line(-1, 1, 80, true);
  Field u = sampled(g, 1, [](double x, double) {
    return scalar(0.5 + std::sin(M_PI * x) + (std::abs(x) < 0.3 ? 1.0 : 0.0));
  });
  const double before = u.interior().sum();
  StepControl ctl;
  ctl.t_final = 1000 * 0.5 * g.x.dx();
  const auto res = evolve(u, BoundarySpec::uniform(BcKind::Periodic, 1),
                          SchemeConfig::defaults(Scheme::Theta6), {Physics::LinearAdvection}, ctl);
  CHECK(res.steps == 1000);
  CHECK(res.t == ctl.t_final);
  CHECK(std::abs(u.interior().sum() - before) <= 1e-12 * std::abs(before));
}

TEST_CASE("non-finite values abort the step") {
  const Grid g = line(-1, 1, 20, true);
  Field u = sampled(g, 1, [](double x, double) { return scalar(std::sin(M_PI * x)); });
  u.node(7)(0) = std::numeric_limits<double>::quiet_NaN();
  try {
    rk3_step(u, 0.25, 0.01, BoundarySpec::uniform(BcKind::Periodic, 1),
             SchemeConfig::defaults(Scheme::Theta6), {Physics::LinearAdvection});
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.stage == 1);
    CHECK(e.t == 0.25);
    CHECK(e.j == 0);
    CHECK(std::string(e.what()).find("stage 1") != std::string::npos);
  }
}

TEST_CASE("first Sod step creates no new extrema") {
  const Grid g = line(-5, 5, 300, false);
  Field u = sampled(g, 3, [](double x, double) {
    return x < 0 ? euler1(0.125, 0, 0.1) : euler1(1, 0, 1);
  });
  const PdeSystem sys{Physics::Euler1D};
  const BoundarySpec bc = BoundarySpec::uniform(BcKind::ZeroGradient, 1);
  StepControl ctl;
  ctl.cfl = 0.5;
  ctl.t_final = 1;
  const double dt = compute_dt(u, sys, ctl, 0);
  const Field u0 = u;

  // the only excursions come from epsilon leaking through small characteristic jumps
  const auto excursion = [&](double eps) {
    Field v = u0;
    SchemeConfig cfg = SchemeConfig::defaults(Scheme::Theta6);
    cfg.epsilon = eps;
    rk3_step(v, 0, dt, bc, cfg, sys);
    const Eigen::VectorXd rho = v.interior().row(0).transpose();
    REQUIRE(rho.allFinite());
    return std::max(0.125 - rho.minCoeff(), rho.maxCoeff() - 1);
  };
  const double jump = 1 - 0.125;
  CHECK(excursion(1e-10) <= 1e-6 * jump);
  CHECK(excursion(1e-14) <= 1e-10 * jump);
}

TEST_CASE("evolve validates its inputs") {
  const Grid g = line(-1, 1, 20, false);
  Field u = sampled(g, 1, [](double, double) { return scalar(1); });
  StepControl ctl;
  ctl.t_final = 0.1;
  CHECK_THROWS_AS(evolve(u, BoundarySpec::uniform(BcKind::Periodic, 1),
                         SchemeConfig::defaults(Scheme::JS), {Physics::LinearAdvection}, ctl),
                  ConfigError);
  ctl.t_final = 0;
  const auto res = evolve(u, BoundarySpec::uniform(BcKind::ZeroGradient, 1),
                          SchemeConfig::defaults(Scheme::JS), {Physics::LinearAdvection}, ctl);
  CHECK(res.steps == 0);
}
