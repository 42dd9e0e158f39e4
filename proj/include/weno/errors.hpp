#pragma once

#include <stdexcept>
#include <string>

namespace weno {

/// Invalid run configuration (bad names, mismatched boundaries, missing
/// wave speed for the CFL law).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN/Inf produced during time stepping.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, int stage, int i, int j, double t)
      : std::runtime_error(what), stage(stage), i(i), j(j), t(t) {}
  int stage;
  int i, j;
  double t;
};

}  // namespace weno
