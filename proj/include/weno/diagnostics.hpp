#pragma once

// Error norms, observed orders, symmetry probes, conservation totals and
// convergence-table formatting.

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "weno/integrator.hpp"
#include "weno/mesh.hpp"

namespace weno {

/// dx * sum |a - b|; `cell_measure` is dx (1D) or dx*dy (2D).
double l1_error(const Eigen::Ref<const Eigen::VectorXd>& numeric,
                const Eigen::Ref<const Eigen::VectorXd>& exact, double cell_measure);
double linf_error(const Eigen::Ref<const Eigen::VectorXd>& numeric,
                  const Eigen::Ref<const Eigen::VectorXd>& exact);

/// One component over the unique interior nodes, x fastest.
Eigen::VectorXd component(const Field& f, int comp);
double cell_measure(const Grid& g);

/// log2(coarse/fine); empty when either error is not positive.
std::optional<double> observed_order(double e_coarse, double e_fine);

enum class SymmetryKind { XMirror, YMirror, Diagonal };

/// Max over nodes of |rho(P) - rho(mirror(P))| (the scalar itself for scalar
/// physics).
double symmetry_error(const Field& f, SymmetryKind kind, Physics physics);
/// Same probe for every conserved component, momenta sign-adjusted.
Eigen::VectorXd symmetry_error_components(const Field& f, SymmetryKind kind, Physics physics);
/// Applies the mirror to the whole field.
Field mirrored(const Field& f, SymmetryKind kind, Physics physics);

/// Cell-measure weighted sums of each component over unique interior nodes.
Eigen::VectorXd total_conserved(const Field& f);

double total_variation(const Eigen::Ref<const Eigen::VectorXd>& v);

struct ConvergenceRow {
  int n = 0;
  double l1 = 0;
  double linf = 0;
  std::optional<double> order_l1;
  std::optional<double> order_linf;
  std::string error;  // non-empty when the run for this row failed
};

/// Fills orders from successive rows (each row's grid twice the previous).
void fill_orders(std::vector<ConvergenceRow>& rows);

/// "6.9E-09"
std::string format_error(double e);
/// "6.9E-09 (6.0)" or "4.5E-07 (-)"
std::string format_cell(double e, const std::optional<double>& order);

std::string convergence_table_text(const std::vector<ConvergenceRow>& rows,
                                   const std::string& title);
std::string convergence_table_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace weno
