#pragma once

#include <stdexcept>

#include "weno/euler.hpp"

namespace weno {

using Primitive1D = PrimitiveState<double, 1>;

/// The two rarefactions would separate: no positive star pressure exists.
class VacuumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Star-region iteration failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StarState {
  double p;
  double u;
  int iterations;
};

/// Exact solution of the 1D Riemann problem for an ideal gas.
class ExactRiemann {
 public:
  ExactRiemann(const Primitive1D& left, const Primitive1D& right, double gamma = 1.4);

  const StarState& star() const { return star_; }

  /// Similarity solution at xi = x / t.
  Primitive1D sample(double xi) const;

  /// Density on either side of the contact.
  double star_density_left() const;
  double star_density_right() const;

  /// Shock speed on the given side, or NaN if that wave is a rarefaction.
  double left_shock_speed() const;
  double right_shock_speed() const;

 private:
  Primitive1D left_, right_;
  double gamma_;
  double cl_, cr_;
  StarState star_{};
};

/// Star pressure from plain bisection on the pressure function; kept as an
/// independent cross-check of the Newton iteration.
double star_pressure_bisection(const Primitive1D& left, const Primitive1D& right, double gamma,
                               double rel_tol = 1e-14);

/// Convenience wrapper: sampled exact solution at x/t.
Primitive1D exact_riemann(const Primitive1D& left, const Primitive1D& right, double gamma,
                          double x_over_t);

}  // namespace weno
