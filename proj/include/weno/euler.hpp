#pragma once

// Euler gas dynamics for the characteristic-wise reconstruction: state
// conversions, physical fluxes, Roe-averaged eigensystems, global
// Lax-Friedrichs splitting and the interface flux assembly.

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "weno/stencil.hpp"

namespace weno {

/// Non-physical state (rho <= 0, p <= 0, imaginary Roe sound speed).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename Scalar, int Dim>
struct PrimitiveState {
  static_assert(Dim == 1 || Dim == 2);
  Scalar rho{};
  Eigen::Matrix<Scalar, Dim, 1> vel = Eigen::Matrix<Scalar, Dim, 1>::Zero();
  Scalar p{};
};

/// (rho, rho u, [rho v,] E)
template <typename Scalar, int Dim>
using ConservedState = Eigen::Matrix<Scalar, Dim + 2, 1>;

template <typename Scalar, int M>
struct EigenSystem {
  Eigen::Matrix<Scalar, M, 1> lambdas;
  Eigen::Matrix<Scalar, M, M> left;   // rows are left eigenvectors
  Eigen::Matrix<Scalar, M, M> right;  // columns are right eigenvectors
};

template <typename Scalar, int Dim>
ConservedState<Scalar, Dim> prim_to_cons(const PrimitiveState<Scalar, Dim>& w, Scalar gamma) {
  if (!(w.rho > 0)) throw DomainError("non-physical state: rho = " + std::to_string(w.rho));
  if (!(w.p > 0)) throw DomainError("non-physical state: p = " + std::to_string(w.p));
  ConservedState<Scalar, Dim> u;
  u(0) = w.rho;
  u.template segment<Dim>(1) = w.rho * w.vel;
  u(Dim + 1) = w.p / (gamma - 1) + w.rho * w.vel.squaredNorm() / 2;
  return u;
}

template <typename Scalar, int Dim>
PrimitiveState<Scalar, Dim> cons_to_prim(const ConservedState<Scalar, Dim>& u, Scalar gamma) {
  PrimitiveState<Scalar, Dim> w;
  w.rho = u(0);
  if (!(w.rho > 0)) throw DomainError("non-physical state: rho = " + std::to_string(w.rho));
  w.vel = u.template segment<Dim>(1) / w.rho;
  w.p = (gamma - 1) * (u(Dim + 1) - w.rho * w.vel.squaredNorm() / 2);
  if (!(w.p > 0)) throw DomainError("non-physical state: p = " + std::to_string(w.p));
  return w;
}

/// Physical flux along `axis` (0: f, 1: g).
template <typename Scalar, int Dim>
ConservedState<Scalar, Dim> euler_flux(const ConservedState<Scalar, Dim>& u, Scalar gamma,
                                       int axis = 0) {
  const PrimitiveState<Scalar, Dim> w = cons_to_prim<Scalar, Dim>(u, gamma);
  const Scalar un = w.vel(axis);
  ConservedState<Scalar, Dim> f;
  f(0) = u(0) * un;
  f.template segment<Dim>(1) = u.template segment<Dim>(1) * un;
  f(1 + axis) += w.p;
  f(Dim + 1) = (u(Dim + 1) + w.p) * un;
  return f;
}

template <typename Scalar, int Dim>
Scalar sound_speed(const PrimitiveState<Scalar, Dim>& w, Scalar gamma) {
  return std::sqrt(gamma * w.p / w.rho);
}

namespace detail {

// Eigen-decomposition of the flux Jacobian along `axis` for velocity `vel`,
// total enthalpy `h` and sound speed `c`.  Wave order: un-c, un (entropy),
// [un (shear),] un+c.
template <typename Scalar, int Dim>
EigenSystem<Scalar, Dim + 2> euler_eigensystem(const Eigen::Matrix<Scalar, Dim, 1>& vel,
                                               Scalar h, Scalar c, Scalar gamma, int axis) {
  constexpr int M = Dim + 2;
  EigenSystem<Scalar, M> es;
  const Scalar un = vel(axis);
  const Scalar q2 = vel.squaredNorm();
  const Scalar b1 = (gamma - 1) / (c * c);
  const Scalar b2 = b1 * q2 / 2;
  auto& R = es.right;
  auto& L = es.left;
  R.setZero();
  L.setZero();

  es.lambdas(0) = un - c;
  es.lambdas(1) = un;
  es.lambdas(M - 1) = un + c;

  R(0, 0) = 1;
  R(0, 1) = 1;
  R(0, M - 1) = 1;
  for (int d = 0; d < Dim; ++d) {
    const Scalar n = d == axis ? Scalar(1) : Scalar(0);
    R(1 + d, 0) = vel(d) - c * n;
    R(1 + d, 1) = vel(d);
    R(1 + d, M - 1) = vel(d) + c * n;
  }
  R(M - 1, 0) = h - un * c;
  R(M - 1, 1) = q2 / 2;
  R(M - 1, M - 1) = h + un * c;

  L(0, 0) = (b2 + un / c) / 2;
  L(1, 0) = 1 - b2;
  L(M - 1, 0) = (b2 - un / c) / 2;
  for (int d = 0; d < Dim; ++d) {
    const Scalar n = d == axis ? Scalar(1) : Scalar(0);
    L(0, 1 + d) = (-b1 * vel(d) - n / c) / 2;
    L(1, 1 + d) = b1 * vel(d);
    L(M - 1, 1 + d) = (-b1 * vel(d) + n / c) / 2;
  }
  L(0, M - 1) = b1 / 2;
  L(1, M - 1) = -b1;
  L(M - 1, M - 1) = b1 / 2;

  if constexpr (Dim == 2) {
    // shear wave: tangential velocity, tangent t = (-n_y, n_x)
    const Scalar tx = axis == 0 ? Scalar(0) : Scalar(-1);
    const Scalar ty = axis == 0 ? Scalar(1) : Scalar(0);
    const Scalar ut = vel(0) * tx + vel(1) * ty;
    es.lambdas(2) = un;
    R(1, 2) = tx;
    R(2, 2) = ty;
    R(3, 2) = ut;
    L(2, 0) = -ut;
    L(2, 1) = tx;
    L(2, 2) = ty;
  }
  return es;
}

}  // namespace detail

/// Eigensystem of the Jacobian at a single state.
template <typename Scalar, int Dim>
EigenSystem<Scalar, Dim + 2> jacobian_eigensystem(const ConservedState<Scalar, Dim>& u,
                                                  Scalar gamma, int axis = 0) {
  const PrimitiveState<Scalar, Dim> w = cons_to_prim<Scalar, Dim>(u, gamma);
  const Scalar h = (u(Dim + 1) + w.p) / w.rho;
  return detail::euler_eigensystem<Scalar, Dim>(w.vel, h, sound_speed(w, gamma), gamma, axis);
}

/// Roe-averaged eigensystem between two states along `axis`.
template <typename Scalar, int Dim>
EigenSystem<Scalar, Dim + 2> roe_average(const PrimitiveState<Scalar, Dim>& left,
                                         const PrimitiveState<Scalar, Dim>& right, Scalar gamma,
                                         int axis = 0) {
  if (!(left.rho > 0 && right.rho > 0 && left.p > 0 && right.p > 0))
    throw DomainError("roe_average: non-physical input state");
  const Scalar sl = std::sqrt(left.rho);
  const Scalar sr = std::sqrt(right.rho);
  const Scalar inv = 1 / (sl + sr);
  const Eigen::Matrix<Scalar, Dim, 1> vel = (sl * left.vel + sr * right.vel) * inv;
  auto enthalpy = [gamma](const PrimitiveState<Scalar, Dim>& s) {
    return gamma / (gamma - 1) * s.p / s.rho + s.vel.squaredNorm() / 2;
  };
  const Scalar h = (sl * enthalpy(left) + sr * enthalpy(right)) * inv;
  const Scalar c2 = (gamma - 1) * (h - vel.squaredNorm() / 2);
  if (!(c2 > 0)) throw DomainError("roe_average: degenerate state (averaged c^2 <= 0)");
  return detail::euler_eigensystem<Scalar, Dim>(vel, h, std::sqrt(c2), gamma, axis);
}

/// Roe average from conserved states, which is what the sweeps hold.
template <typename Scalar, int Dim>
EigenSystem<Scalar, Dim + 2> roe_average(const ConservedState<Scalar, Dim>& left,
                                         const ConservedState<Scalar, Dim>& right, Scalar gamma,
                                         int axis = 0) {
  return roe_average<Scalar, Dim>(cons_to_prim<Scalar, Dim>(left, gamma),
                                  cons_to_prim<Scalar, Dim>(right, gamma), gamma,
                                  axis);
}

/// Global Lax-Friedrichs split f = f+ + f-.  f- is formed as f - f+ so the
/// pair recombines to f whenever that subtraction is exact.
template <typename Scalar>
std::pair<Scalar, Scalar> lf_split(Scalar f, Scalar u, Scalar alpha) {
  const Scalar plus = (f + alpha * u) / 2;
  return {plus, f - plus};
}

/// Interface flux at x_{j+1/2} reconstructed field by field in the
/// characteristic variables of `eig`.  `u` and `f` hold states and fluxes at
/// j-2..j+3; `alpha` is the splitting bound per characteristic family.
template <typename Scalar, int M>
Eigen::Matrix<Scalar, M, 1> char_interface_flux(
    std::span<const Eigen::Matrix<Scalar, M, 1>, 6> u,
    std::span<const Eigen::Matrix<Scalar, M, 1>, 6> f, const EigenSystem<Scalar, M>& eig,
    const Eigen::Matrix<Scalar, M, 1>& alpha, const SchemeConfig& cfg) {
  Eigen::Matrix<Scalar, M, 6> cu, cf;
  for (int k = 0; k < 6; ++k) {
    cu.col(k).noalias() = eig.left * u[k];
    cf.col(k).noalias() = eig.left * f[k];
  }
  Eigen::Matrix<Scalar, M, 1> g;
  for (int s = 0; s < M; ++s) {
    FluxWindow<Scalar> wp, wm;
    for (int k = 0; k < 6; ++k) {
      const auto [plus, minus] = lf_split(cf(s, k), cu(s, k), alpha(s));
      wp(k) = plus;
      wm(5 - k) = minus;
    }
    g(s) = reconstruct_plus(cfg, wp) + reconstruct_minus(cfg, wm);
  }
  return eig.right * g;
}

}  // namespace weno
