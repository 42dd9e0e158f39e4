#include "weno/mesh.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "weno/euler.hpp"

namespace weno {

void Grid::validate() const {
  auto check = [this](const Axis& a, const char* name) {
    if (!(a.hi > a.lo) || a.n < 1)
      throw ConfigError(std::string("grid: axis ") + name + " needs hi > lo and n >= 1");
    if (a.nodes() <= ghost)
      throw ConfigError(std::string("grid: axis ") + name + " has fewer nodes than the ghost width");
  };
  if (ghost < 3) throw ConfigError("grid: ghost width must be at least 3");
  check(x, "x");
  if (y) check(*y, "y");
}

Eigen::MatrixXd Field::interior() const {
  const int nx = grid.nx(), ny = grid.ny();
  Eigen::MatrixXd out(m(), nx * ny);
  for (int j = 0; j < ny; ++j)
    out.middleCols(j * nx, nx) = data.middleCols(grid.index(0, j), nx);
  return out;
}

void Field::set_interior(const Eigen::MatrixXd& values) {
  const int nx = grid.nx(), ny = grid.ny();
  if (values.rows() != m() || values.cols() != nx * ny)
    throw std::invalid_argument("Field::set_interior: shape mismatch");
  for (int j = 0; j < ny; ++j)
    data.middleCols(grid.index(0, j), nx) = values.middleCols(j * nx, nx);
}

BoundarySpec BoundarySpec::uniform(BcKind kind, int dim) {
  BoundarySpec bc;
  for (int s = 0; s < 2 * dim; ++s) bc.sides[s].kind = kind;
  return bc;
}

void validate_boundaries(const Grid& grid, const BoundarySpec& bc) {
  auto check_axis = [&](const Axis& a, Side lo, Side hi, const char* name) {
    const bool plo = bc[lo].kind == BcKind::Periodic;
    const bool phi = bc[hi].kind == BcKind::Periodic;
    if (plo != phi)
      throw ConfigError(std::string("boundary: periodic ") + name + " side without its pair");
    if (plo != a.periodic)
      throw ConfigError(std::string("boundary: periodic ") + name +
                        " sides need a periodic grid axis (and vice versa)");
    for (Side s : {lo, hi})
      if (bc[s].kind == BcKind::TimeDependent && !bc[s].callback)
        throw ConfigError(std::string("boundary: time-dependent ") + name + " side has no callback");
  };
  check_axis(grid.x, Side::XLo, Side::XHi, "x");
  if (grid.y) check_axis(*grid.y, Side::YLo, Side::YHi, "y");
}

namespace {

// Ghost source for ghost offset k = 1..g beyond the boundary node.
struct Mirror {
  int src;
  bool negate;
};

Mirror ghost_source(BcKind kind, bool hi, int k, int nodes) {
  switch (kind) {
    case BcKind::Periodic:
      return hi ? Mirror{(k - 1) % nodes, false}
                : Mirror{((nodes - k) % nodes + nodes) % nodes, false};
    case BcKind::ZeroGradient:
      return {hi ? nodes - 1 : 0, false};
    case BcKind::Reflective:
    case BcKind::TimeDependent:
      return {hi ? nodes - 1 - k : k, true};
  }
  return {0, false};
}

}  // namespace

void fill_ghosts(Field& field, const BoundarySpec& bc, double t) {
  const Grid& g = field.grid;
  const int gw = g.ghost;
  const int nx = g.nx(), ny = g.ny();

  auto apply = [&](const SideBc& side, int comp, int dst_col, int src_col, bool negate,
                   double x, double y) {
    if (side.kind == BcKind::TimeDependent) {
      if (auto v = side.callback(x, y, t)) {
        field.data.col(dst_col) = *v;
        return;
      }
    }
    field.data.col(dst_col) = field.data.col(src_col);
    if (negate && comp >= 0 && side.kind != BcKind::Periodic &&
        side.kind != BcKind::ZeroGradient)
      field.data(comp, dst_col) = -field.data(comp, dst_col);
  };

  const int cx = bc.normal_component[0];
  for (int j = 0; j < ny; ++j) {
    const double y = g.y ? g.y->coord(j) : 0.0;
    for (int k = 1; k <= gw; ++k) {
      const SideBc& lo = bc[Side::XLo];
      const Mirror ml = ghost_source(lo.kind, false, k, nx);
      apply(lo, cx, g.index(-k, j), g.index(ml.src, j), ml.negate, g.x.coord(-k), y);
      const SideBc& hi = bc[Side::XHi];
      const Mirror mh = ghost_source(hi.kind, true, k, nx);
      apply(hi, cx, g.index(nx - 1 + k, j), g.index(mh.src, j), mh.negate,
            g.x.coord(nx - 1 + k), y);
    }
  }
  if (!g.y) return;

  const int cy = bc.normal_component[1];
  for (int i = -gw; i < nx + gw; ++i) {
    const double x = g.x.coord(i);
    for (int k = 1; k <= gw; ++k) {
      const SideBc& lo = bc[Side::YLo];
      const Mirror ml = ghost_source(lo.kind, false, k, ny);
      apply(lo, cy, g.index(i, -k), g.index(i, ml.src), ml.negate, x, g.y->coord(-k));
      const SideBc& hi = bc[Side::YHi];
      const Mirror mh = ghost_source(hi.kind, true, k, ny);
      apply(hi, cy, g.index(i, ny - 1 + k), g.index(i, mh.src), mh.negate, x,
            g.y->coord(ny - 1 + k));
    }
  }
}

namespace {
constexpr double kDmrX0 = 1.0 / 6.0;
}

double dmr_shock_position(double t) {
  const double cos30 = std::sqrt(3.0) / 2.0;
  const double a_pre = 1.0;  // sqrt(1.4 * 1 / 1.4)
  return kDmrX0 + 1.0 / std::sqrt(3.0) + 10.0 * a_pre / cos30 * t;
}

Eigen::VectorXd dmr_post_shock(double gamma) {
  PrimitiveState<double, 2> w;
  w.rho = 8.0;
  w.vel << 8.25 * std::cos(std::numbers::pi / 6), -8.25 * std::sin(std::numbers::pi / 6);
  w.p = 116.5;
  return prim_to_cons(w, gamma);
}

Eigen::VectorXd dmr_pre_shock(double gamma) {
  PrimitiveState<double, 2> w;
  w.rho = 1.4;
  w.p = 1.0;
  return prim_to_cons(w, gamma);
}

BoundarySpec dmr_boundaries(double gamma) {
  const Eigen::VectorXd post = dmr_post_shock(gamma);
  const Eigen::VectorXd pre = dmr_pre_shock(gamma);
  BoundarySpec bc;
  bc.normal_component = {1, 2};
  bc[Side::XLo] = {BcKind::TimeDependent,
                   [post](double, double, double) -> std::optional<Eigen::VectorXd> {
                     return post;
                   }};
  bc[Side::XHi] = {BcKind::ZeroGradient, {}};
  bc[Side::YLo] = {BcKind::TimeDependent,
                   [post](double x, double, double) -> std::optional<Eigen::VectorXd> {
                     if (x < kDmrX0) return post;
                     return std::nullopt;
                   }};
  bc[Side::YHi] = {BcKind::TimeDependent,
                   [post, pre](double x, double, double t) -> std::optional<Eigen::VectorXd> {
                     return x < dmr_shock_position(t) ? post : pre;
                   }};
  return bc;
}

}  // namespace weno
