#pragma once

// Catalog of benchmark configurations: initial data, boundaries, run length
// and the reference used for error measurement.

#include <Eigen/Core>

#include <functional>
#include <stdexcept>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weno/diagnostics.hpp"
#include "weno/exact_riemann.hpp"
#include "weno/integrator.hpp"
#include "weno/mesh.hpp"

namespace weno {

enum class ReferenceKind { None, ExactFunction, ExactRiemann, FineGridJS };

/// Requested an exact solution from a problem that has none.
class UnsupportedReference : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RiemannData {
  Primitive1D left;
  Primitive1D right;
  double x_jump = 0;
};

struct ProblemSpec {
  std::string name;
  std::string description;
  Physics physics = Physics::LinearAdvection;
  Axis x;                 // default (desk) grid
  std::optional<Axis> y;
  int paper_nx = 0;       // full-size grid where it differs from the default
  int paper_ny = 0;
  double t_final = 0;
  double alpha_r = 50;
  double gamma = 1.4;
  double gravity = 0;
  ReferenceKind reference = ReferenceKind::None;
  int reference_n = 0;    // FineGridJS: stated fine grid
  BoundarySpec bc;
  std::optional<SymmetryKind> symmetry;
  /// Conserved state at (x, y).
  std::function<Eigen::VectorXd(double, double)> ic;
  /// Scalar initial profile, kept for exact translation.
  std::function<double(double)> profile;
  std::optional<RiemannData> riemann;

  int dim() const { return y ? 2 : 1; }
};

const std::vector<ProblemSpec>& catalog();
std::vector<std::string> problem_names();

/// Looks a problem up by name; throws ConfigError listing the vocabulary.
ProblemSpec find_problem(std::string_view name);

/// The kinked profile max(s*sin(pi x), 0) with s = -1 (default) or +1.
ProblemSpec critical_problem(bool positive_sine = false);

PdeSystem pde_system(const ProblemSpec& spec);

/// Grid for a run: overrides n/ny, or the full-size grid when `paper_grid`.
/// A 2D override of n alone keeps the default aspect ratio.
Grid make_grid(const ProblemSpec& spec, std::optional<int> n = {}, std::optional<int> ny = {},
               bool paper_grid = false);

Field initial_field(const ProblemSpec& spec, const Grid& grid);

/// Exact conserved state at (x, t); throws UnsupportedReference.
Eigen::VectorXd exact_solution(const ProblemSpec& spec, double x, double t);
Field exact_field(const ProblemSpec& spec, const Grid& grid, double t);

/// Smallest multiple of `coarse_n` not below the stated fine grid.
int reference_grid(const ProblemSpec& spec, int coarse_n);

/// WENO-JS on a fine grid (an integer multiple of the coarse one) to
/// t_final, subsampled onto `coarse`.
Field reference_solution(const ProblemSpec& spec, const Grid& coarse, int fine_n, double t_final,
                         double cfl = 0.5);

}  // namespace weno
