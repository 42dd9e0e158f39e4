#pragma once

// Node-centred uniform grids with ghost padding and boundary fills.

#include <Eigen/Core>

#include <array>
#include <functional>
#include <optional>

#include "weno/errors.hpp"

namespace weno {

/// One coordinate direction: nodes x_i = lo + i*dx, dx = (hi - lo)/n.
/// A periodic axis stores n unique nodes (x_n coincides with x_0); a
/// bounded axis stores all n + 1.
struct Axis {
  double lo = 0;
  double hi = 1;
  int n = 1;
  bool periodic = false;

  int nodes() const { return periodic ? n : n + 1; }
  double dx() const { return (hi - lo) / n; }
  double coord(int i) const { return lo + i * dx(); }
};

struct Grid {
  Axis x;
  std::optional<Axis> y;
  int ghost = 3;

  int dim() const { return y ? 2 : 1; }
  int nx() const { return x.nodes(); }
  int ny() const { return y ? y->nodes() : 1; }
  int gy() const { return y ? ghost : 0; }
  int stride() const { return nx() + 2 * ghost; }
  int padded_rows() const { return ny() + 2 * gy(); }
  int total() const { return stride() * padded_rows(); }
  /// Storage column of node (i, j); ghost nodes have negative or
  /// past-the-end indices.
  int index(int i, int j = 0) const { return (i + ghost) + (j + gy()) * stride(); }

  void validate() const;
};

/// Conserved components stored column-per-node; columns are laid out
/// row-major over the padded grid so an x-line is contiguous.
struct Field {
  Field() = default;
  Field(const Grid& g, int m) : grid(g), data(Eigen::MatrixXd::Zero(m, g.total())) {}

  int m() const { return static_cast<int>(data.rows()); }
  auto node(int i, int j = 0) { return data.col(grid.index(i, j)); }
  auto node(int i, int j = 0) const { return data.col(grid.index(i, j)); }

  /// Interior nodes only, m x (nx*ny), x fastest.
  Eigen::MatrixXd interior() const;
  void set_interior(const Eigen::MatrixXd& values);

  Grid grid;
  Eigen::MatrixXd data;
};

enum class BcKind { Periodic, ZeroGradient, Reflective, TimeDependent };
enum class Side { XLo = 0, XHi = 1, YLo = 2, YHi = 3 };

/// Ghost state at (x, y, t); returning nullopt reflects that ghost instead,
/// which lets one side mix Dirichlet and wall segments.
using GhostCallback = std::function<std::optional<Eigen::VectorXd>(double, double, double)>;

struct SideBc {
  BcKind kind = BcKind::ZeroGradient;
  GhostCallback callback;
};

struct BoundarySpec {
  std::array<SideBc, 4> sides{};
  /// Component negated by a reflection across an x-side and a y-side
  /// (normal momentum); -1 for none.
  std::array<int, 2> normal_component{-1, -1};

  SideBc& operator[](Side s) { return sides[static_cast<int>(s)]; }
  const SideBc& operator[](Side s) const { return sides[static_cast<int>(s)]; }

  static BoundarySpec uniform(BcKind kind, int dim);
};

/// Checks periodic sides come in pairs and agree with the grid axes.
void validate_boundaries(const Grid& grid, const BoundarySpec& bc);

/// Populates every ghost slot of `field` at time t.  x-sides are filled for
/// interior rows first, then y-sides over the full padded width.
void fill_ghosts(Field& field, const BoundarySpec& bc, double t);

/// Double Mach reflection: shock foot on the top boundary.
double dmr_shock_position(double t);
Eigen::VectorXd dmr_post_shock(double gamma = 1.4);
Eigen::VectorXd dmr_pre_shock(double gamma = 1.4);
BoundarySpec dmr_boundaries(double gamma = 1.4);

}  // namespace weno
