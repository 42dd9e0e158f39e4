#pragma once

// Semi-discrete right-hand side (dimension by dimension), wave-speed bounds,
// time-step control and TVD Runge-Kutta stepping.

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <functional>
#include <utility>

#include "weno/errors.hpp"
#include "weno/mesh.hpp"
#include "weno/stencil.hpp"

namespace weno {

enum class Physics { LinearAdvection, Burgers, Euler1D, Euler2D };

int components(Physics p);
int dimension(Physics p);

struct PdeSystem {
  Physics physics = Physics::LinearAdvection;
  double gamma = 1.4;
  double gravity = 0;  // acts along -y, Euler2D only
  /// Split each characteristic family with its own global bound; false uses
  /// the largest bound for every family.
  bool per_field_alpha = true;
};

/// Global max |lambda_s| per family, one entry per axis.
struct WaveSpeeds {
  std::array<Eigen::VectorXd, 2> family;
  std::array<double, 2> overall{0, 0};
};

WaveSpeeds max_wave_speed(const Field& u, const PdeSystem& sys);

enum class DtLaw { CflBound, FixedPower };

struct StepControl {
  double cfl = 0.5;
  DtLaw law = DtLaw::CflBound;
  int power = 2;  // FixedPower: dt = dx^power
  double t_final = 0;

  void validate() const;
};

/// Step size at time t, clipped so the run lands on t_final.
double compute_dt(const WaveSpeeds& ws, const Grid& grid, const StepControl& ctl, double t);
double compute_dt(const Field& u, const PdeSystem& sys, const StepControl& ctl, double t);

/// du/dt on interior nodes.  Fills the ghosts of `u` at time t first; ghost
/// slots of `dudt` are left at zero.
void rhs(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg, const PdeSystem& sys,
         double t, Field& dudt);
void rhs_1d(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg, const PdeSystem& sys,
            double t, Field& dudt);
void rhs_2d(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg, const PdeSystem& sys,
            double t, Field& dudt);

/// -g rho on y-momentum and -g rho v on energy.
void add_gravity_source(const Field& u, double g, Field& dudt);

/// Three-stage TVD Runge-Kutta on any Eigen state.  Stage times are t,
/// t + dt and t + dt/2.  `check(state, stage)` runs after each stage.
template <typename Rhs, typename Check>
void rk3_advance(Eigen::MatrixXd& u, double t, double dt, Rhs&& rhs, Check&& check) {
  Eigen::MatrixXd k(u.rows(), u.cols());
  Eigen::MatrixXd u1 = u;
  rhs(u1, t, k);
  u1 += dt * k;
  check(u1, 1);

  rhs(u1, t + dt, k);
  Eigen::MatrixXd u2 = 0.75 * u + 0.25 * u1 + (0.25 * dt) * k;
  check(u2, 2);

  rhs(u2, t + 0.5 * dt, k);
  u = (1.0 / 3.0) * u + (2.0 / 3.0) * u2 + (2.0 / 3.0 * dt) * k;
  check(u, 3);
}

template <typename Rhs>
void rk3_advance(Eigen::MatrixXd& u, double t, double dt, Rhs&& rhs) {
  rk3_advance(u, t, dt, std::forward<Rhs>(rhs), [](const Eigen::MatrixXd&, int) {});
}

/// Throws NumericalError naming the first non-finite interior node.
void check_finite(const Field& u, int stage, double t);
void check_finite(const Grid& g, const Eigen::MatrixXd& data, int stage, double t);

void rk3_step(Field& u, double t, double dt, const BoundarySpec& bc, const SchemeConfig& cfg,
              const PdeSystem& sys);

struct EvolveResult {
  int steps = 0;
  double t = 0;
};

using StepObserver = std::function<void(int step, double t, const Field& u)>;

/// Advances from t0 to ctl.t_final; ghosts of `u` are current on return.
EvolveResult evolve(Field& u, const BoundarySpec& bc, const SchemeConfig& cfg,
                    const PdeSystem& sys, const StepControl& ctl, double t0 = 0,
                    const StepObserver& observer = {});

}  // namespace weno
