#pragma once

// Run configuration, orchestration of single runs / scheme comparisons /
// convergence suites, and field output.

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weno/diagnostics.hpp"
#include "weno/problems.hpp"
#include "weno/stencil.hpp"

namespace weno {

inline constexpr int kFieldSchemaVersion = 1;
inline constexpr const char* kOutDirEnv = "WENO_OUT_DIR";

struct RunConfig {
  std::string command = "run";
  std::string problem;
  Scheme scheme = Scheme::Theta6;
  std::optional<int> n;
  std::optional<int> ny;
  double cfl = 0.5;
  std::optional<int> dt_power;
  std::optional<double> t_final;
  std::optional<double> alpha_r;
  std::optional<double> epsilon;
  std::string out_dir;
  std::vector<Scheme> schemes;  // compare
  std::vector<int> grids;       // converge
  int threads = 1;
  bool paper_grid = false;
  bool critical_positive = false;
  bool write_files = true;
  bool compute_reference = true;

  /// Canonical key=value text, the basis of the config hash.
  std::string canonical() const;
  std::uint64_t hash() const;
};

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitConfig = 2, kExitNumerical = 3 };

/// Flat key=value text; '#' starts a comment.  Unknown keys are errors.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Applies key=value settings onto `cfg`; throws ConfigError on unknown keys
/// or malformed values.
void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& kv);

/// Command-line parsing.  Precedence: flags, then the --config file, then
/// problem defaults.  Throws ConfigError; returns nullopt after --help.
std::optional<RunConfig> parse_config(int argc, const char* const* argv);

/// Cross-checks a config against its problem (dimension, names, ranges).
void validate_config(const RunConfig& cfg);

std::string default_out_dir();

struct RunReport {
  std::string problem;
  std::string scheme;
  int n = 0;
  int ny = 0;
  double t_final = 0;
  int steps = 0;
  double wall_seconds = 0;
  std::string error_quantity;  // "rho" or "u"
  std::optional<double> l1;
  std::optional<double> linf;
  std::string reference;
  std::optional<double> symmetry_error;
  Eigen::VectorXd totals_initial;
  Eigen::VectorXd totals_final;
  std::vector<std::string> outputs;
  Field solution;
};

ProblemSpec resolve_problem(const RunConfig& cfg);
SchemeConfig scheme_config(const RunConfig& cfg, const ProblemSpec& spec, Scheme scheme);
StepControl step_control(const RunConfig& cfg, const ProblemSpec& spec);

/// Single solve with `cfg.scheme`.  Throws NumericalError on NaN.
RunReport run(const RunConfig& cfg);

/// One run per scheme in cfg.schemes plus a combined overlay CSV.
std::vector<RunReport> compare(const RunConfig& cfg);

/// Error table over cfg.grids; dt = dx^2 unless a dt power is given.  A
/// failing row records its error and the remaining rows still run.
std::vector<ConvergenceRow> convergence_suite(const RunConfig& cfg);

std::string field_header(Physics physics);

/// CSV with 17 significant digits; 2D in row-major order (x fastest).
void write_field(const Field& f, Physics physics, double gamma,
                 const std::filesystem::path& path);
void write_meta(const RunConfig& cfg, const ProblemSpec& spec, const Grid& grid, double t,
                Scheme scheme, const std::filesystem::path& path);
/// Reads a file produced by write_field back into conserved variables.
Field read_field(const std::filesystem::path& path, const Grid& grid, Physics physics);

std::string report_json(const RunReport& r);
std::string report_summary(const RunReport& r);

}  // namespace weno
