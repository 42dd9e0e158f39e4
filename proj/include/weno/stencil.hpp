#pragma once

// Interface-flux reconstruction kernels for the five-/six-point WENO family:
// JS, Z, NW6, CU6 and the adaptive upwind/central Theta6 scheme.
//
// Every kernel reads a FluxWindow holding (f_{j-2}, ..., f_{j+3}) and works
// toward the value at x_{j+1/2}.  Kernels are pure, allocation-free, and
// templated on the scalar type.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weno {

template <typename Scalar>
using FluxWindow = Eigen::Matrix<Scalar, 6, 1>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

enum class Scheme { JS, Z, NW6, CU6, Theta6 };

inline std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::JS: return "js";
    case Scheme::Z: return "z";
    case Scheme::NW6: return "nw6";
    case Scheme::CU6: return "cu6";
    case Scheme::Theta6: return "theta6";
  }
  return "?";
}

/// Throws std::invalid_argument for names outside {js, z, nw6, cu6, theta6}.
inline Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::JS, Scheme::Z, Scheme::NW6, Scheme::CU6, Scheme::Theta6})
    if (scheme_name(s) == name) return s;
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (valid: js, z, nw6, cu6, theta6)");
}

struct SchemeConfig {
  Scheme scheme = Scheme::Theta6;
  double epsilon = 1e-10;
  int p_js = 2;
  int q_z = 1;
  double c_cu = 20.0;
  double alpha_r = 50.0;

  /// Published tunables for `s`; epsilon differs per scheme.
  static SchemeConfig defaults(Scheme s) {
    SchemeConfig cfg;
    cfg.scheme = s;
    switch (s) {
      case Scheme::JS: cfg.epsilon = 1e-6; break;
      case Scheme::Z: cfg.epsilon = 1e-40; break;
      default: cfg.epsilon = 1e-10; break;
    }
    return cfg;
  }

  /// Throws std::invalid_argument naming the first out-of-range tunable.
  void validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    if (p_js < 1) throw std::invalid_argument("p_js must be >= 1");
    if (q_z < 1) throw std::invalid_argument("q_z must be >= 1");
    if (!(c_cu >= 1.0)) throw std::invalid_argument("c_cu must be >= 1");
    if (!(alpha_r >= 0.0)) throw std::invalid_argument("alpha_r must be >= 0");
  }
};

template <typename Scalar>
struct WeightSet {
  Vector4<Scalar> omega = Vector4<Scalar>::Zero();
  Vector4<Scalar> gamma = Vector4<Scalar>::Zero();
  Scalar theta = 0;  // Theta6 only
  Scalar tau = 0;    // large-stencil indicator that drove the weights
};

template <typename Scalar>
struct IndicatorSet {
  Vector4<Scalar> beta = Vector4<Scalar>::Zero();
  Scalar tau5 = 0;
  Scalar tau6 = 0;
};

template <typename Scalar>
struct ThetaChoice {
  Scalar tau;
  Scalar theta;
};

namespace detail {

template <typename Scalar>
constexpr Scalar sq(Scalar v) {
  return v * v;
}

template <typename Scalar>
Scalar ipow(Scalar base, int n) {
  Scalar r = 1;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// (1/4)(sum b^4)^(1/4), rescaled by the max so b^4 cannot overflow
template <typename Scalar>
Scalar quartic_mean(const Eigen::Matrix<Scalar, 4, 1>& b) {
  const Scalar m = b.maxCoeff();
  if (m == 0) return 0;
  const Eigen::Matrix<Scalar, 4, 1> r = b / m;
  return m * std::sqrt(std::sqrt(r.array().square().square().sum())) / 4;
}

}  // namespace detail

/// Third-order candidates f^0..f^3 at x_{j+1/2} from the sub-stencils
/// S_0 = {j-2..j}, S_1 = {j-1..j+1}, S_2 = {j..j+2}, S_3 = {j+1..j+3}.
template <typename Scalar>
Vector4<Scalar> substencil_values(const FluxWindow<Scalar>& w) {
  Vector4<Scalar> v;
  v(0) = (2 * w(0) - 7 * w(1) + 11 * w(2)) / 6;
  v(1) = (-w(1) + 5 * w(2) + 2 * w(3)) / 6;
  v(2) = (2 * w(2) + 5 * w(3) - w(4)) / 6;
  v(3) = (11 * w(3) - 7 * w(4) + 2 * w(5)) / 6;
  return v;
}

/// Fifth-order upwind linear reconstruction over {j-2..j+2}.
template <typename Scalar>
Scalar linear_5th(const FluxWindow<Scalar>& w) {
  return (2 * w(0) - 13 * w(1) + 47 * w(2) + 27 * w(3) - 3 * w(4)) / 60;
}

/// Sixth-order central linear reconstruction over {j-2..j+3}.
template <typename Scalar>
Scalar linear_6th(const FluxWindow<Scalar>& w) {
  return (w(0) - 8 * w(1) + 37 * w(2) + 37 * w(3) - 8 * w(4) + w(5)) / 60;
}

template <typename Scalar>
Vector4<Scalar> upwind5_gamma() {
  return Vector4<Scalar>(Scalar(1) / 10, Scalar(6) / 10, Scalar(3) / 10, Scalar(0));
}

template <typename Scalar>
Vector4<Scalar> central6_gamma() {
  return Vector4<Scalar>(Scalar(1) / 20, Scalar(9) / 20, Scalar(9) / 20, Scalar(1) / 20);
}

/// Linear weights blending the 5th-order upwind (theta = 1) and 6th-order
/// central (theta = 0) reconstructions.
template <typename Scalar>
Vector4<Scalar> gamma_theta(Scalar theta) {
  if (!(theta >= 0 && theta <= 1))
    throw std::domain_error("gamma_theta: theta must lie in [0, 1]");
  return Vector4<Scalar>((1 + theta) / 20, 3 * (3 + theta) / 20, 3 * (3 - theta) / 20,
                         (1 - theta) / 20);
}

template <typename Scalar>
Vector3<Scalar> beta_upwind(const FluxWindow<Scalar>& w) {
  using detail::sq;
  const Scalar c13 = Scalar(13) / 12;
  const Scalar c14 = Scalar(1) / 4;
  Vector3<Scalar> b;
  b(0) = c13 * sq(w(0) - 2 * w(1) + w(2)) + c14 * sq(w(0) - 4 * w(1) + 3 * w(2));
  b(1) = c13 * sq(w(1) - 2 * w(2) + w(3)) + c14 * sq(w(3) - w(1));
  b(2) = c13 * sq(w(2) - 2 * w(3) + w(4)) + c14 * sq(3 * w(2) - 4 * w(3) + w(4));
  return b;
}

/// Upwind-style indicator of the downwind sub-stencil S_3 alone.
template <typename Scalar>
Scalar beta3_nw_tilde(const FluxWindow<Scalar>& w) {
  using detail::sq;
  return Scalar(13) / 12 * sq(w(3) - 2 * w(4) + w(5)) +
         Scalar(1) / 4 * sq(-5 * w(3) + 8 * w(4) - 3 * w(5));
}

/// Quartic mean over all four sub-stencil indicators, so S_3 only
/// contributes when the whole six-point stencil is smooth.
template <typename Scalar>
Scalar beta3_nw(const FluxWindow<Scalar>& w) {
  const Vector3<Scalar> b = beta_upwind(w);
  return detail::quartic_mean(Vector4<Scalar>(b(0), b(1), b(2), beta3_nw_tilde(w)));
}

/// Six-point indicator from the degree-five reconstruction polynomial.
/// The corrected 28-coefficient quadratic form (prefactor 1/120960) is
/// evaluated on first differences d_i = f_{i+1} - f_i, which is the same
/// form but vanishes exactly on constant data.
template <typename Scalar>
Scalar beta3_cu(const FluxWindow<Scalar>& w) {
  const Scalar d0 = w(1) - w(0), d1 = w(2) - w(1), d2 = w(3) - w(2), d3 = w(4) - w(3),
               d4 = w(5) - w(4);
  const Scalar s =
      271779 * d0 * d0 +
      d0 * (-1837242 * d1 + 2249110 * d2 - 1213142 * d3 + 245620 * d4) +
      d1 * (3544296 * d1 - 9252940 * d2 + 5189840 * d3 - 1079386 * d4) +
      d2 * (6713736 * d2 - 7947412 * d3 + 1713274 * d4) +
      d3 * (2534504 * d3 - 1150710 * d4) + 139633 * d4 * d4;
  return s / 120960;
}

/// Indicators built from reconstruction polynomials centred on x_{j+1/2};
/// all four share the same Taylor expansion about x_j through O(dx^4).
template <typename Scalar>
Vector4<Scalar> beta_central(const FluxWindow<Scalar>& w) {
  using detail::sq;
  const Scalar c13 = Scalar(13) / 12;
  Vector4<Scalar> b;
  b(0) = c13 * sq(w(0) - 2 * w(1) + w(2)) + sq(w(0) - 3 * w(1) + 2 * w(2));
  b(1) = c13 * sq(w(1) - 2 * w(2) + w(3)) + sq(w(3) - w(2));
  b(2) = c13 * sq(w(2) - 2 * w(3) + w(4)) + sq(w(2) - w(3));
  b(3) = Scalar(13) / 48 * sq(3 * w(2) - 7 * w(3) + 5 * w(4) - w(5)) +
         sq(2 * w(3) - 3 * w(4) + w(5));
  return b;
}

/// Zeroes every indicator when max/(eps + min) does not exceed alpha_r.
template <typename Scalar>
Vector4<Scalar> ratio_cutoff(const Vector4<Scalar>& betas, Scalar alpha_r, Scalar epsilon) {
  const Scalar ratio = betas.maxCoeff() / (epsilon + betas.minCoeff());
  if (ratio <= alpha_r) return Vector4<Scalar>::Zero();
  return betas;
}

template <typename Scalar>
Scalar tau_z(const FluxWindow<Scalar>& w) {
  const Vector3<Scalar> b = beta_upwind(w);
  return std::abs(b(0) - b(2));
}

/// Squared fifth undivided difference over the six-point stencil.
template <typename Scalar>
Scalar tau_nw(const FluxWindow<Scalar>& w) {
  return detail::sq(w(0) - 5 * w(1) + 10 * w(2) - 10 * w(3) + 5 * w(4) - w(5));
}

/// beta3 - (beta0 + 4 beta1 + beta2)/6.  The underlying quadratic form is
/// indefinite, so the magnitude is used; roundoff-level values become 0.
template <typename Scalar>
Scalar tau_cu(const Vector4<Scalar>& betas) {
  const Scalar t = betas(3) - (betas(0) + 4 * betas(1) + betas(2)) / 6;
  const Scalar mag = std::abs(t);
  if (mag <= Scalar(1e-14) * betas.sum()) return 0;
  return mag;
}

template <typename Scalar>
Scalar tau_cu(const FluxWindow<Scalar>& w) {
  const Vector3<Scalar> b = beta_upwind(w);
  return tau_cu(Vector4<Scalar>(b(0), b(1), b(2), beta3_cu(w)));
}

template <typename Scalar>
Scalar tau5(const FluxWindow<Scalar>& w) {
  using detail::sq;
  return Scalar(13) / 12 * sq(w(0) - 4 * w(1) + 6 * w(2) - 4 * w(3) + w(4)) +
         sq(-w(1) + 3 * w(2) - 3 * w(3) + w(4));
}

template <typename Scalar>
Scalar tau6(const FluxWindow<Scalar>& w) {
  using detail::sq;
  return Scalar(13) / 12 * sq(-w(0) + 5 * w(1) - 10 * w(2) + 10 * w(3) - 5 * w(4) + w(5)) +
         Scalar(1) / 4 * sq(w(0) - 3 * w(1) + 2 * w(2) + 2 * w(3) - 3 * w(4) + w(5));
}

/// Central branch (theta = 0) only when tau6 is strictly smaller.
template <typename Scalar>
ThetaChoice<Scalar> theta_select(Scalar t5, Scalar t6) {
  if (t6 < t5) return {t6, Scalar(0)};
  return {t5, Scalar(1)};
}

/// Sub-stencil indicators as consumed by the weights of `cfg.scheme`
/// (before any ratio cutoff), plus tau5/tau6 of the window.
template <typename Scalar>
IndicatorSet<Scalar> indicators(const SchemeConfig& cfg, const FluxWindow<Scalar>& w) {
  IndicatorSet<Scalar> ind;
  switch (cfg.scheme) {
    case Scheme::JS:
    case Scheme::Z: {
      const Vector3<Scalar> b = beta_upwind(w);
      ind.beta << b(0), b(1), b(2), Scalar(0);
      break;
    }
    case Scheme::NW6: {
      const Vector3<Scalar> b = beta_upwind(w);
      ind.beta << b(0), b(1), b(2), beta3_nw(w);
      break;
    }
    case Scheme::CU6: {
      const Vector3<Scalar> b = beta_upwind(w);
      ind.beta << b(0), b(1), b(2), beta3_cu(w);
      break;
    }
    case Scheme::Theta6:
      ind.beta = beta_central(w);
      break;
  }
  ind.tau5 = tau5(w);
  ind.tau6 = tau6(w);
  return ind;
}

/// Normalised nonlinear weights of `cfg.scheme` on window `w`.
template <typename Scalar>
WeightSet<Scalar> weights(const SchemeConfig& cfg, const FluxWindow<Scalar>& w) {
  using detail::ipow;
  const Scalar eps = static_cast<Scalar>(cfg.epsilon);
  WeightSet<Scalar> ws;
  Vector4<Scalar> alpha;

  switch (cfg.scheme) {
    case Scheme::JS: {
      const Vector3<Scalar> b = beta_upwind(w);
      ws.gamma = upwind5_gamma<Scalar>();
      for (int k = 0; k < 3; ++k) alpha(k) = ws.gamma(k) / ipow(eps + b(k), cfg.p_js);
      alpha(3) = 0;
      break;
    }
    case Scheme::Z: {
      const Vector3<Scalar> b = beta_upwind(w);
      ws.gamma = upwind5_gamma<Scalar>();
      ws.tau = std::abs(b(0) - b(2));
      for (int k = 0; k < 3; ++k)
        alpha(k) = ws.gamma(k) * (1 + ipow(ws.tau / (eps + b(k)), cfg.q_z));
      alpha(3) = 0;
      break;
    }
    case Scheme::NW6: {
      const Vector3<Scalar> b3 = beta_upwind(w);
      const Scalar beta3 =
          detail::quartic_mean(Vector4<Scalar>(b3(0), b3(1), b3(2), beta3_nw_tilde(w)));
      const Vector4<Scalar> b(b3(0), b3(1), b3(2), beta3);
      ws.gamma = central6_gamma<Scalar>();
      ws.tau = tau_nw(w);
      for (int k = 0; k < 4; ++k)
        alpha(k) = ws.gamma(k) * (1 + ipow(ws.tau / (eps + b(k)), cfg.q_z));
      break;
    }
    case Scheme::CU6: {
      const Vector3<Scalar> b3 = beta_upwind(w);
      const Vector4<Scalar> b(b3(0), b3(1), b3(2), beta3_cu(w));
      const Scalar c = static_cast<Scalar>(cfg.c_cu);
      ws.gamma = central6_gamma<Scalar>();
      ws.tau = tau_cu(b);
      for (int k = 0; k < 4; ++k) alpha(k) = ws.gamma(k) * (c + ws.tau / (eps + b(k)));
      break;
    }
    case Scheme::Theta6: {
      const Vector4<Scalar> b =
          ratio_cutoff(beta_central(w), static_cast<Scalar>(cfg.alpha_r), eps);
      const ThetaChoice<Scalar> choice = theta_select(tau5(w), tau6(w));
      ws.theta = choice.theta;
      ws.tau = choice.tau;
      ws.gamma = gamma_theta(choice.theta);
      for (int k = 0; k < 4; ++k) alpha(k) = ws.gamma(k) * (1 + ws.tau / (eps + b(k)));
      break;
    }
  }
  ws.omega = alpha / alpha.sum();
  return ws;
}

/// Positive-flux reconstruction at x_{j+1/2}.
template <typename Scalar>
Scalar reconstruct_plus(const SchemeConfig& cfg, const FluxWindow<Scalar>& w) {
  const WeightSet<Scalar> ws = weights(cfg, w);
  return ws.omega.dot(substencil_values(w));
}

/// Window mirrored about the interface: (f_{j+3}, ..., f_{j-2}).
template <typename Scalar>
FluxWindow<Scalar> reflect(const FluxWindow<Scalar>& w) {
  return w.reverse();
}

/// Negative-flux reconstruction; `w_mirror` is already ordered
/// (f_{j+3}, ..., f_{j-2}) so the same code path as reconstruct_plus serves.
template <typename Scalar>
Scalar reconstruct_minus(const SchemeConfig& cfg, const FluxWindow<Scalar>& w_mirror) {
  return reconstruct_plus(cfg, w_mirror);
}

}  // namespace weno
