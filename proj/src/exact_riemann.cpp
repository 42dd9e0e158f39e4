#include "weno/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace weno {

namespace {

void check_state(const Primitive1D& s, const char* side) {
  if (!(s.rho > 0) || !(s.p > 0))
    throw DomainError(std::string("exact_riemann: non-physical ") + side + " state");
}

// f_K(p) from one side; shock branch for p > p_K, rarefaction otherwise
double side_function(double p, double rho, double pk, double ck, double gamma, double* deriv) {
  if (p > pk) {
    const double a = 2.0 / ((gamma + 1.0) * rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * pk;
    const double q = std::sqrt(a / (p + b));
    if (deriv) *deriv = q * (1.0 - 0.5 * (p - pk) / (b + p));
    return (p - pk) * q;
  }
  const double ratio = p / pk;
  const double e = (gamma - 1.0) / (2.0 * gamma);
  if (deriv) *deriv = std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma)) / (rho * ck);
  return 2.0 * ck / (gamma - 1.0) * (std::pow(ratio, e) - 1.0);
}

double total_function(double p, const Primitive1D& l, const Primitive1D& r, double cl, double cr,
                      double gamma) {
  return side_function(p, l.rho, l.p, cl, gamma, nullptr) +
         side_function(p, r.rho, r.p, cr, gamma, nullptr) + (r.vel(0) - l.vel(0));
}

void check_vacuum(const Primitive1D& l, const Primitive1D& r, double cl, double cr,
                  double gamma) {
  if (2.0 / (gamma - 1.0) * (cl + cr) <= r.vel(0) - l.vel(0))
    throw VacuumError("exact_riemann: data generate vacuum");
}

}  // namespace

ExactRiemann::ExactRiemann(const Primitive1D& left, const Primitive1D& right, double gamma)
    : left_(left), right_(right), gamma_(gamma) {
  check_state(left_, "left");
  check_state(right_, "right");
  cl_ = sound_speed(left_, gamma_);
  cr_ = sound_speed(right_, gamma_);
  check_vacuum(left_, right_, cl_, cr_, gamma_);

  const double du = right_.vel(0) - left_.vel(0);
  // two-rarefaction guess
  const double z = (gamma_ - 1.0) / (2.0 * gamma_);
  const double num = cl_ + cr_ - 0.5 * (gamma_ - 1.0) * du;
  const double den = cl_ / std::pow(left_.p, z) + cr_ / std::pow(right_.p, z);
  double p = std::pow(num / den, 1.0 / z);
  if (!(p > 0) || !std::isfinite(p)) p = 0.5 * (left_.p + right_.p);

  bool converged = false;
  int it = 0;
  for (; it < 100; ++it) {
    double dl = 0, dr = 0;
    const double fl = side_function(p, left_.rho, left_.p, cl_, gamma_, &dl);
    const double fr = side_function(p, right_.rho, right_.p, cr_, gamma_, &dr);
    double step = (fl + fr + du) / (dl + dr);
    double next = p - step;
    // damping keeps the iterate positive
    while (!(next > 0)) {
      step *= 0.5;
      next = p - step;
    }
    const double change = std::abs(next - p) / (0.5 * (next + p));
    p = next;
    if (change <= 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    try {
      p = star_pressure_bisection(left_, right_, gamma_);
    } catch (const ConvergenceError&) {
      throw ConvergenceError("exact_riemann: star pressure did not converge in 100 iterations");
    }
  }
  const double fl = side_function(p, left_.rho, left_.p, cl_, gamma_, nullptr);
  const double fr = side_function(p, right_.rho, right_.p, cr_, gamma_, nullptr);
  star_ = {p, 0.5 * (left_.vel(0) + right_.vel(0)) + 0.5 * (fr - fl), it + 1};
}

double ExactRiemann::star_density_left() const {
  const double g = gamma_;
  const double ratio = star_.p / left_.p;
  if (star_.p > left_.p) {
    const double k = (g - 1.0) / (g + 1.0);
    return left_.rho * (ratio + k) / (k * ratio + 1.0);
  }
  return left_.rho * std::pow(ratio, 1.0 / g);
}

double ExactRiemann::star_density_right() const {
  const double g = gamma_;
  const double ratio = star_.p / right_.p;
  if (star_.p > right_.p) {
    const double k = (g - 1.0) / (g + 1.0);
    return right_.rho * (ratio + k) / (k * ratio + 1.0);
  }
  return right_.rho * std::pow(ratio, 1.0 / g);
}

double ExactRiemann::left_shock_speed() const {
  if (!(star_.p > left_.p)) return std::numeric_limits<double>::quiet_NaN();
  const double g = gamma_;
  return left_.vel(0) -
         cl_ * std::sqrt((g + 1.0) / (2.0 * g) * star_.p / left_.p + (g - 1.0) / (2.0 * g));
}

double ExactRiemann::right_shock_speed() const {
  if (!(star_.p > right_.p)) return std::numeric_limits<double>::quiet_NaN();
  const double g = gamma_;
  return right_.vel(0) +
         cr_ * std::sqrt((g + 1.0) / (2.0 * g) * star_.p / right_.p + (g - 1.0) / (2.0 * g));
}

Primitive1D ExactRiemann::sample(double xi) const {
  const double g = gamma_;
  const double pm = star_.p;
  const double um = star_.u;
  Primitive1D out;

  if (xi <= um) {
    const Primitive1D& s = left_;
    const double u = s.vel(0);
    if (pm > s.p) {
      if (xi <= left_shock_speed()) return s;
      out.rho = star_density_left();
      out.vel(0) = um;
      out.p = pm;
      return out;
    }
    const double head = u - cl_;
    const double cm = cl_ * std::pow(pm / s.p, (g - 1.0) / (2.0 * g));
    const double tail = um - cm;
    if (xi <= head) return s;
    if (xi >= tail) {
      out.rho = star_density_left();
      out.vel(0) = um;
      out.p = pm;
      return out;
    }
    // inside the left fan
    const double c = 2.0 / (g + 1.0) * (cl_ + 0.5 * (g - 1.0) * (u - xi));
    out.vel(0) = 2.0 / (g + 1.0) * (cl_ + 0.5 * (g - 1.0) * u + xi);
    out.rho = s.rho * std::pow(c / cl_, 2.0 / (g - 1.0));
    out.p = s.p * std::pow(c / cl_, 2.0 * g / (g - 1.0));
    return out;
  }

  const Primitive1D& s = right_;
  const double u = s.vel(0);
  if (pm > s.p) {
    if (xi >= right_shock_speed()) return s;
    out.rho = star_density_right();
    out.vel(0) = um;
    out.p = pm;
    return out;
  }
  const double head = u + cr_;
  const double cm = cr_ * std::pow(pm / s.p, (g - 1.0) / (2.0 * g));
  const double tail = um + cm;
  if (xi >= head) return s;
  if (xi <= tail) {
    out.rho = star_density_right();
    out.vel(0) = um;
    out.p = pm;
    return out;
  }
  const double c = 2.0 / (g + 1.0) * (cr_ - 0.5 * (g - 1.0) * (u - xi));
  out.vel(0) = 2.0 / (g + 1.0) * (-cr_ + 0.5 * (g - 1.0) * u + xi);
  out.rho = s.rho * std::pow(c / cr_, 2.0 / (g - 1.0));
  out.p = s.p * std::pow(c / cr_, 2.0 * g / (g - 1.0));
  return out;
}

double star_pressure_bisection(const Primitive1D& left, const Primitive1D& right, double gamma,
                               double rel_tol) {
  check_state(left, "left");
  check_state(right, "right");
  const double cl = sound_speed(left, gamma);
  const double cr = sound_speed(right, gamma);
  check_vacuum(left, right, cl, cr, gamma);

  // total_function is increasing in p and negative as p -> 0 when no vacuum
  double lo = 0.0;
  double hi = std::max(left.p, right.p);
  int guard = 0;
  while (total_function(hi, left, right, cl, cr, gamma) < 0) {
    hi *= 2.0;
    if (++guard > 200) throw ConvergenceError("bisection: no bracket");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (total_function(mid, left, right, cl, cr, gamma) < 0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= rel_tol * hi) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("bisection: did not converge");
}

Primitive1D exact_riemann(const Primitive1D& left, const Primitive1D& right, double gamma,
                          double x_over_t) {
  return ExactRiemann(left, right, gamma).sample(x_over_t);
}

}  // namespace weno
