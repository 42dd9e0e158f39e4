#include "weno/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace weno {

namespace {

void require_same_size(Eigen::Index a, Eigen::Index b) {
  if (a != b)
    throw std::invalid_argument("error norm: grid mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + " nodes)");
}

// Pairwise summation keeps totals independent of how a caller chunks work.
double pairwise_sum(const double* v, Eigen::Index n) {
  if (n <= 16) {
    double s = 0;
    for (Eigen::Index i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const Eigen::Index h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

int mirror_index(const Axis& a, int i) {
  const int nodes = a.nodes();
  return a.periodic ? (a.n - i) % a.n : nodes - 1 - i;
}

}  // namespace

double l1_error(const Eigen::Ref<const Eigen::VectorXd>& numeric,
                const Eigen::Ref<const Eigen::VectorXd>& exact, double cell_measure) {
  require_same_size(numeric.size(), exact.size());
  const Eigen::VectorXd d = (numeric - exact).cwiseAbs();
  return cell_measure * pairwise_sum(d.data(), d.size());
}

double linf_error(const Eigen::Ref<const Eigen::VectorXd>& numeric,
                  const Eigen::Ref<const Eigen::VectorXd>& exact) {
  require_same_size(numeric.size(), exact.size());
  if (numeric.size() == 0) return 0;
  return (numeric - exact).cwiseAbs().maxCoeff();
}

Eigen::VectorXd component(const Field& f, int comp) {
  if (comp < 0 || comp >= f.m()) throw std::invalid_argument("component index out of range");
  return f.interior().row(comp).transpose();
}

double cell_measure(const Grid& g) { return g.x.dx() * (g.y ? g.y->dx() : 1.0); }

std::optional<double> observed_order(double e_coarse, double e_fine) {
  if (!(e_coarse > 0) || !(e_fine > 0) || !std::isfinite(e_coarse) || !std::isfinite(e_fine))
    return std::nullopt;
  return std::log2(e_coarse / e_fine);
}

Field mirrored(const Field& f, SymmetryKind kind, Physics physics) {
  const Grid& g = f.grid;
  if ((kind == SymmetryKind::YMirror || kind == SymmetryKind::Diagonal) && !g.y)
    throw std::invalid_argument("symmetry: y-mirror and diagonal need a 2D grid");
  if (kind == SymmetryKind::Diagonal &&
      (g.x.n != g.y->n || g.x.lo != g.y->lo || g.x.hi != g.y->hi ||
       g.x.periodic != g.y->periodic))
    throw std::invalid_argument("symmetry: diagonal transpose needs a square grid");

  const bool euler = physics == Physics::Euler1D || physics == Physics::Euler2D;
  Field out = f;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      int si = i, sj = j;
      switch (kind) {
        case SymmetryKind::XMirror:
          si = mirror_index(g.x, i);
          break;
        case SymmetryKind::YMirror:
          sj = mirror_index(*g.y, j);
          break;
        case SymmetryKind::Diagonal:
          si = j;
          sj = i;
          break;
      }
      auto dst = out.node(i, j);
      dst = f.node(si, sj);
      if (!euler) continue;
      if (kind == SymmetryKind::XMirror) dst(1) = -dst(1);
      if (kind == SymmetryKind::YMirror) dst(2) = -dst(2);
      if (kind == SymmetryKind::Diagonal) std::swap(dst(1), dst(2));
    }
  }
  return out;
}

Eigen::VectorXd symmetry_error_components(const Field& f, SymmetryKind kind, Physics physics) {
  const Field m = mirrored(f, kind, physics);
  const Eigen::MatrixXd a = f.interior();
  const Eigen::MatrixXd b = m.interior();
  return (a - b).cwiseAbs().rowwise().maxCoeff();
}

double symmetry_error(const Field& f, SymmetryKind kind, Physics physics) {
  return symmetry_error_components(f, kind, physics)(0);
}

Eigen::VectorXd total_conserved(const Field& f) {
  const Eigen::MatrixXd in = f.interior();
  Eigen::VectorXd totals(f.m());
  for (int c = 0; c < f.m(); ++c) {
    const Eigen::VectorXd row = in.row(c).transpose();
    totals(c) = cell_measure(f.grid) * pairwise_sum(row.data(), row.size());
  }
  return totals;
}

double total_variation(const Eigen::Ref<const Eigen::VectorXd>& v) {
  double tv = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) tv += std::abs(v(i) - v(i - 1));
  return tv;
}

void fill_orders(std::vector<ConvergenceRow>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r].order_l1.reset();
    rows[r].order_linf.reset();
    if (r == 0 || !rows[r].error.empty() || !rows[r - 1].error.empty()) continue;
    if (rows[r].n != 2 * rows[r - 1].n) continue;
    rows[r].order_l1 = observed_order(rows[r - 1].l1, rows[r].l1);
    rows[r].order_linf = observed_order(rows[r - 1].linf, rows[r].linf);
  }
}

std::string format_error(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1E", e);
  return buf;
}

std::string format_cell(double e, const std::optional<double>& order) {
  char buf[32];
  if (order)
    std::snprintf(buf, sizeof buf, "(%.1f)", *order);
  else
    std::snprintf(buf, sizeof buf, "(-)");
  return format_error(e) + " " + buf;
}

std::string convergence_table_text(const std::vector<ConvergenceRow>& rows,
                                   const std::string& title) {
  std::ostringstream os;
  char line[160];
  os << title << "\n";
  std::snprintf(line, sizeof line, "%6s  %-16s  %-16s\n", "N", "L1 error", "Linf error");
  os << line;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      std::snprintf(line, sizeof line, "%6d  failed: %s\n", r.n, r.error.c_str());
    } else {
      std::snprintf(line, sizeof line, "%6d  %-16s  %-16s\n", r.n,
                    format_cell(r.l1, r.order_l1).c_str(),
                    format_cell(r.linf, r.order_linf).c_str());
    }
    os << line;
  }
  return os.str();
}

std::string convergence_table_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "n,l1,order_l1,linf,order_linf,error\n";
  os.precision(17);
  for (const auto& r : rows) {
    os << r.n << ',' << r.l1 << ',';
    if (r.order_l1) os << *r.order_l1;
    os << ',' << r.linf << ',';
    if (r.order_linf) os << *r.order_linf;
    os << ',' << r.error << '\n';
  }
  return os.str();
}

}  // namespace weno
