#include "weno/integrator.hpp"

#include <algorithm>
#include <exception>
#include <span>
#include <string>

#include "weno/euler.hpp"

#ifdef WENO_HAVE_OPENMP
#include <omp.h>
#endif

namespace weno {

int components(Physics p) {
  switch (p) {
    case Physics::LinearAdvection:
    case Physics::Burgers:
      return 1;
    case Physics::Euler1D:
      return 3;
    case Physics::Euler2D:
      return 4;
  }
  return 1;
}

int dimension(Physics p) { return p == Physics::Euler2D ? 2 : 1; }

void StepControl::validate() const {
  if (!(cfl > 0) || cfl > 1) throw ConfigError("cfl must lie in (0, 1]");
  if (!(t_final >= 0)) throw ConfigError("t_final must be >= 0");
  if (law == DtLaw::FixedPower && power < 1) throw ConfigError("dt power must be >= 1");
}

namespace {

std::string node_label(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// Per-family |lambda| at one state; family order matches the eigensystem.
template <int Dim>
Eigen::Matrix<double, Dim + 2, 1> euler_abs_lambdas(const Eigen::Matrix<double, Dim + 2, 1>& u,
                                                    double gamma, int axis) {
  const auto w = cons_to_prim<double, Dim>(u, gamma);
  const double c = sound_speed(w, gamma);
  const double un = w.vel(axis);
  Eigen::Matrix<double, Dim + 2, 1> l;
  l(0) = std::abs(un - c);
  l.template segment<Dim>(1).setConstant(std::abs(un));
  l(Dim + 1) = std::abs(un + c);
  return l;
}

// Cached per-line data handed to the sweeps.
struct LineSetup {
  const SchemeConfig* cfg;
  const PdeSystem* sys;
  int axis;
  double inv_dx;
  int n;      // interior nodes on the line
  int ghost;
};

template <int M>
using LineMatrix = Eigen::Matrix<double, M, Eigen::Dynamic>;

template <int M>
Eigen::Matrix<double, M, 1> physical_flux(const Eigen::Matrix<double, M, 1>& u,
                                          const PdeSystem& sys, int axis) {
  if constexpr (M == 1) {
    Eigen::Matrix<double, 1, 1> f;
    f(0) = sys.physics == Physics::Burgers ? 0.5 * u(0) * u(0) : u(0);
    return f;
  } else {
    return euler_flux<double, M - 2>(u, sys.gamma, axis);
  }
}

// Fills `out` (M x n) with -(h_{i+1/2} - h_{i-1/2})/dx along one padded line.
template <int M>
void sweep_line(const LineMatrix<M>& line, const Eigen::Matrix<double, M, 1>& alpha,
                const LineSetup& ls, LineMatrix<M>& out) {
  using Vec = Eigen::Matrix<double, M, 1>;
  const int len = static_cast<int>(line.cols());
  LineMatrix<M> f(M, len);
  for (int k = 0; k < len; ++k) f.col(k) = physical_flux<M>(line.col(k), *ls.sys, ls.axis);

  // interface fluxes h_{k+1/2} for k = g-1 .. g+n-1
  LineMatrix<M> h(M, ls.n + 1);
  if constexpr (M == 1) {
    Eigen::RowVectorXd fp(len), fm(len);
    for (int k = 0; k < len; ++k) {
      const auto [p, m] = lf_split(f(0, k), line(0, k), alpha(0));
      fp(k) = p;
      fm(k) = m;
    }
    for (int q = 0; q <= ls.n; ++q) {
      const int k = ls.ghost - 1 + q;
      FluxWindow<double> wp, wm;
      for (int s = 0; s < 6; ++s) {
        wp(s) = fp(k - 2 + s);
        wm(5 - s) = fm(k - 2 + s);
      }
      h(0, q) = reconstruct_plus(*ls.cfg, wp) + reconstruct_minus(*ls.cfg, wm);
    }
  } else {
    constexpr int Dim = M - 2;
    std::array<Vec, 6> uw, fw;
    for (int q = 0; q <= ls.n; ++q) {
      const int k = ls.ghost - 1 + q;
      for (int s = 0; s < 6; ++s) {
        uw[s] = line.col(k - 2 + s);
        fw[s] = f.col(k - 2 + s);
      }
      const auto eig = roe_average<double, Dim>(ConservedState<double, Dim>(line.col(k)),
                                                ConservedState<double, Dim>(line.col(k + 1)),
                                                ls.sys->gamma, ls.axis);
      h.col(q) = char_interface_flux<double, M>(std::span<const Vec, 6>(uw),
                                                std::span<const Vec, 6>(fw), eig, alpha, *ls.cfg);
    }
  }
  out.resize(M, ls.n);
  for (int i = 0; i < ls.n; ++i) out.col(i) = -(h.col(i + 1) - h.col(i)) * ls.inv_dx;
}

template <int M>
Eigen::Matrix<double, M, 1> split_bounds(const WaveSpeeds& ws, int axis, const PdeSystem& sys) {
  Eigen::Matrix<double, M, 1> a;
  if (sys.per_field_alpha)
    a = ws.family[axis];
  else
    a.setConstant(ws.overall[axis]);
  return a;
}

// Runs `body(line_index)` over [0, count), capturing the first exception.
template <typename Body>
void parallel_lines(int count, Body&& body) {
  std::exception_ptr error;
#ifdef WENO_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int r = 0; r < count; ++r) {
    try {
      body(r);
    } catch (...) {
#ifdef WENO_HAVE_OPENMP
#pragma omp critical(weno_sweep_error)
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

template <int M>
void sweep_x(const Field& u, const WaveSpeeds& ws, const SchemeConfig& cfg,
             const PdeSystem& sys, Field& dudt) {
  const Grid& g = u.grid;
  const LineSetup ls{&cfg, &sys, 0, 1.0 / g.x.dx(), g.nx(), g.ghost};
  const auto alpha = split_bounds<M>(ws, 0, sys);
  const int len = g.stride();
  parallel_lines(g.ny(), [&](int j) {
    const LineMatrix<M> line = u.data.middleCols(g.index(-g.ghost, j), len);
    LineMatrix<M> out;
    try {
      sweep_line<M>(line, alpha, ls, out);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " on x-line j=" + std::to_string(j));
    }
    dudt.data.middleCols(g.index(0, j), g.nx()) += out;
  });
}

template <int M>
void sweep_y(const Field& u, const WaveSpeeds& ws, const SchemeConfig& cfg,
             const PdeSystem& sys, Field& dudt) {
  const Grid& g = u.grid;
  // Euler y-lines run through the x code with the momenta swapped, so a
  // transposed field gives a bit-exact transposed RHS
  constexpr bool swap = M == 4;
  const LineSetup ls{&cfg, &sys, swap ? 0 : 1, 1.0 / g.y->dx(), g.ny(), g.ghost};
  const auto alpha = split_bounds<M>(ws, 1, sys);
  const int len = g.padded_rows();
  parallel_lines(g.nx(), [&](int i) {
    LineMatrix<M> line(M, len);
    for (int r = 0; r < len; ++r) line.col(r) = u.data.col(g.index(i, r - g.ghost));
    if constexpr (swap) line.row(1).swap(line.row(2));
    LineMatrix<M> out;
    try {
      sweep_line<M>(line, alpha, ls, out);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " on y-line i=" + std::to_string(i));
    }
    if constexpr (swap) out.row(1).swap(out.row(2));
    for (int j = 0; j < g.ny(); ++j) dudt.data.col(g.index(i, j)) += out.col(j);
  });
}

void prepare_output(const Field& u, Field& dudt) {
  if (dudt.data.rows() != u.data.rows() || dudt.data.cols() != u.data.cols()) {
    dudt = Field(u.grid, u.m());
  } else {
    dudt.grid = u.grid;
    dudt.data.setZero();
  }
}

}  // namespace

WaveSpeeds max_wave_speed(const Field& u, const PdeSystem& sys) {
  const Grid& g = u.grid;
  const int m = components(sys.physics);
  if (u.m() != m) throw ConfigError("field component count does not match the physics");
  WaveSpeeds ws;
  const int dim = g.dim();
  for (int a = 0; a < dim; ++a) ws.family[a] = Eigen::VectorXd::Zero(m);

  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const auto col = u.node(i, j);
      try {
        switch (sys.physics) {
          case Physics::LinearAdvection:
            ws.family[0](0) = 1.0;
            break;
          case Physics::Burgers:
            ws.family[0](0) = std::max(ws.family[0](0), std::abs(col(0)));
            break;
          case Physics::Euler1D:
            ws.family[0] = ws.family[0].cwiseMax(
                euler_abs_lambdas<1>(Eigen::Vector3d(col), sys.gamma, 0));
            break;
          case Physics::Euler2D:
            for (int a = 0; a < dim; ++a)
              ws.family[a] = ws.family[a].cwiseMax(
                  euler_abs_lambdas<2>(Eigen::Vector4d(col), sys.gamma, a));
            break;
        }
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " at node " + node_label(i, j));
      }
    }
  }
  for (int a = 0; a < dim; ++a) ws.overall[a] = ws.family[a].maxCoeff();
  return ws;
}

double compute_dt(const WaveSpeeds& ws, const Grid& grid, const StepControl& ctl, double t) {
  double dt;
  if (ctl.law == DtLaw::FixedPower) {
    dt = std::pow(grid.x.dx(), ctl.power);
  } else {
    double rate = ws.overall[0] / grid.x.dx();
    if (grid.y) rate += ws.overall[1] / grid.y->dx();
    if (!(rate > 0))
      throw ConfigError("zero wave speed: the CFL law cannot set dt (use a fixed dt power)");
    dt = ctl.cfl / rate;
  }
  const double remaining = ctl.t_final - t;
  // absorb a sliver step that roundoff in t would otherwise leave
  if (dt >= remaining || remaining - dt <= 1e-10 * dt) dt = remaining;
  return dt;
}

double compute_dt(const Field& u, const PdeSystem& sys, const StepControl& ctl, double t) {
  const WaveSpeeds ws = ctl.law == DtLaw::CflBound ? max_wave_speed(u, sys) : WaveSpeeds{};
  return compute_dt(ws, u.grid, ctl, t);
}

void add_gravity_source(const Field& u, double g, Field& dudt) {
  if (g == 0) return;
  if (u.m() != 4) throw ConfigError("gravity source needs a 2D Euler field");
  const Grid& gr = u.grid;
  for (int j = 0; j < gr.ny(); ++j)
    for (int i = 0; i < gr.nx(); ++i) {
      const int c = gr.index(i, j);
      dudt.data(2, c) -= g * u.data(0, c);
      dudt.data(3, c) -= g * u.data(2, c);
    }
}

void rhs_1d(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg, const PdeSystem& sys,
            double t, Field& dudt) {
  if (u.grid.dim() != 1) throw ConfigError("rhs_1d called on a 2D grid");
  fill_ghosts(u, bc, t);
  prepare_output(u, dudt);
  const WaveSpeeds ws = max_wave_speed(u, sys);
  switch (sys.physics) {
    case Physics::LinearAdvection:
    case Physics::Burgers:
      sweep_x<1>(u, ws, cfg, sys, dudt);
      break;
    case Physics::Euler1D:
      sweep_x<3>(u, ws, cfg, sys, dudt);
      break;
    case Physics::Euler2D:
      throw ConfigError("2D Euler physics on a 1D grid");
  }
}

void rhs_2d(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg, const PdeSystem& sys,
            double t, Field& dudt) {
  if (u.grid.dim() != 2) throw ConfigError("rhs_2d called on a 1D grid");
  if (sys.physics != Physics::Euler2D) throw ConfigError("2D grids support 2D Euler only");
  fill_ghosts(u, bc, t);
  prepare_output(u, dudt);
  const WaveSpeeds ws = max_wave_speed(u, sys);
  sweep_x<4>(u, ws, cfg, sys, dudt);
  sweep_y<4>(u, ws, cfg, sys, dudt);
  add_gravity_source(u, sys.gravity, dudt);
}

void rhs(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg, const PdeSystem& sys,
         double t, Field& dudt) {
  if (u.grid.dim() == 1)
    rhs_1d(u, bc, cfg, sys, t, dudt);
  else
    rhs_2d(u, bc, cfg, sys, t, dudt);
}

void check_finite(const Grid& g, const Eigen::MatrixXd& data, int stage, double t) {
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i)
      if (!data.col(g.index(i, j)).allFinite())
        throw NumericalError("non-finite value after RK stage " + std::to_string(stage) +
                                 " at node " + node_label(i, j) + ", t = " + std::to_string(t),
                             stage, i, j, t);
}

void check_finite(const Field& u, int stage, double t) { check_finite(u.grid, u.data, stage, t); }

void rk3_step(Field& u, double t, double dt, const BoundarySpec& bc, const SchemeConfig& cfg,
              const PdeSystem& sys) {
  Field work = u;
  Field out(u.grid, u.m());
  auto op = [&](Eigen::MatrixXd& state, double ts, Eigen::MatrixXd& k) {
    work.data.swap(state);
    try {
      rhs(work, bc, cfg, sys, ts, out);
    } catch (...) {
      work.data.swap(state);
      throw;
    }
    work.data.swap(state);
    k.swap(out.data);
    if (out.data.size() != k.size()) out = Field(u.grid, u.m());
  };
  auto check = [&](const Eigen::MatrixXd& state, int stage) {
    check_finite(u.grid, state, stage, t);
  };
  rk3_advance(u.data, t, dt, op, check);
}

EvolveResult evolve(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg,
                    const PdeSystem& sys, const StepControl& ctl, double t0,
                    const StepObserver& observer) {
  ctl.validate();
  cfg.validate();
  validate_boundaries(u.grid, bc);
  EvolveResult res{0, t0};
  while (res.t < ctl.t_final) {
    const double dt = compute_dt(u, sys, ctl, res.t);
    rk3_step(u, res.t, dt, bc, cfg, sys);
    const double next = res.t + dt;
    res.t = next >= ctl.t_final ? ctl.t_final : next;
    ++res.steps;
    if (observer) observer(res.steps, res.t, u);
  }
  fill_ghosts(u, bc, res.t);
  return res;
}

}  // namespace weno
