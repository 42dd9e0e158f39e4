#include "weno/runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "weno/euler.hpp"

#ifdef WENO_HAVE_OPENMP
#include <omp.h>
#endif

namespace weno {

namespace fs = std::filesystem;

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "problem", "scheme",  "n",          "ny",       "cfl",           "dt_power",
      "t_final", "alpha_r", "epsilon",    "out",      "threads",       "paper_grid",
      "schemes", "grids",   "critical_sign", "write", "reference"};
  return keys;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("setting '" + key + "': expected an integer, got '" + v + "'");
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size())
    throw ConfigError("setting '" + key + "': expected a number, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("setting '" + key + "': expected true/false, got '" + v + "'");
}

Scheme to_scheme(const std::string& v) {
  try {
    return parse_scheme(v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string scheme_list(const std::vector<Scheme>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += scheme_name(s[i]);
  }
  return out;
}

const char* physics_name(Physics p) {
  switch (p) {
    case Physics::LinearAdvection:
      return "linear-advection";
    case Physics::Burgers:
      return "burgers";
    case Physics::Euler1D:
      return "euler1d";
    case Physics::Euler2D:
      return "euler2d";
  }
  return "?";
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void set_threads(int threads) {
#ifdef WENO_HAVE_OPENMP
  omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::string file_stem(const ProblemSpec& spec, const Grid& g, const std::string& tag) {
  std::string stem = spec.name + "_" + tag + "_n" + std::to_string(g.x.n);
  if (g.y) stem += "x" + std::to_string(g.y->n);
  return stem;
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  const fs::path dir = cfg.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                                   ec.message());
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

// Exact or reference field on `grid` at time t, if the problem has one.
std::optional<Field> comparison_field(const RunConfig& cfg, const ProblemSpec& spec,
                                      const Grid& grid, double t, std::string& label) {
  switch (spec.reference) {
    case ReferenceKind::ExactFunction:
      label = "exact";
      return exact_field(spec, grid, t);
    case ReferenceKind::ExactRiemann:
      label = "exact-riemann";
      return exact_field(spec, grid, t);
    case ReferenceKind::FineGridJS: {
      if (!cfg.compute_reference) return std::nullopt;
      const int fine = reference_grid(spec, grid.x.n);
      label = "js-n" + std::to_string(fine);
      return reference_solution(spec, grid, fine, t, cfg.cfl);
    }
    case ReferenceKind::None:
      break;
  }
  return std::nullopt;
}

RunReport execute(const RunConfig& cfg, const ProblemSpec& spec, const Grid& grid, Scheme scheme,
                  const std::optional<Field>& reference, const std::string& ref_label,
                  bool write_files) {
  RunReport r;
  r.problem = spec.name;
  r.scheme = std::string(scheme_name(scheme));
  r.n = grid.x.n;
  r.ny = grid.y ? grid.y->n : 0;
  r.reference = ref_label;

  const PdeSystem sys = pde_system(spec);
  const SchemeConfig scfg = scheme_config(cfg, spec, scheme);
  const StepControl ctl = step_control(cfg, spec);
  Field u = initial_field(spec, grid);
  r.totals_initial = total_conserved(u);

  const auto start = std::chrono::steady_clock::now();
  const EvolveResult res = evolve(u, spec.bc, scfg, sys, ctl);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.steps = res.steps;
  r.t_final = res.t;
  r.totals_final = total_conserved(u);

  r.error_quantity = components(spec.physics) == 1 ? "u" : "rho";
  if (reference) {
    const Eigen::VectorXd a = component(u, 0), b = component(*reference, 0);
    r.l1 = l1_error(a, b, cell_measure(grid));
    r.linf = linf_error(a, b);
  }
  if (spec.symmetry) r.symmetry_error = symmetry_error(u, *spec.symmetry, spec.physics);

  if (write_files) {
    const fs::path dir = ensure_out_dir(cfg);
    const std::string stem = file_stem(spec, grid, r.scheme);
    const fs::path csv = dir / (stem + ".csv");
    const fs::path meta = dir / (stem + ".meta");
    const fs::path json = dir / (stem + ".report.json");
    write_field(u, spec.physics, spec.gamma, csv);
    write_meta(cfg, spec, grid, r.t_final, scheme, meta);
    r.outputs = {csv.string(), meta.string(), json.string()};
    write_text(json, report_json(r));
  }
  r.solution = std::move(u);
  return r;
}

}  // namespace

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os << std::setprecision(17);
  auto opt = [&os](const char* k, const auto& v) {
    os << k << '=';
    if (v) os << *v;
    os << '\n';
  };
  os << "command=" << command << '\n' << "problem=" << problem << '\n'
     << "scheme=" << scheme_name(scheme) << '\n';
  opt("n", n);
  opt("ny", ny);
  os << "cfl=" << cfl << '\n';
  opt("dt_power", dt_power);
  opt("t_final", t_final);
  opt("alpha_r", alpha_r);
  opt("epsilon", epsilon);
  os << "schemes=" << scheme_list(schemes) << '\n' << "grids=";
  for (std::size_t i = 0; i < grids.size(); ++i) os << (i ? "," : "") << grids[i];
  os << '\n'
     << "paper_grid=" << paper_grid << '\n'
     << "critical_sign=" << (critical_positive ? 1 : -1) << '\n'
     << "reference=" << compute_reference << '\n';
  return os.str();
}

std::uint64_t RunConfig::hash() const {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return "weno_out";
}

std::map<std::string, std::string> read_config_file(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '-', '_');
    if (!known_keys().count(key))
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key +
                        "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, v] : kv) {
    if (key == "problem") {
      cfg.problem = v;
    } else if (key == "scheme") {
      cfg.scheme = to_scheme(v);
    } else if (key == "n") {
      cfg.n = to_int(key, v);
    } else if (key == "ny") {
      cfg.ny = to_int(key, v);
    } else if (key == "cfl") {
      cfg.cfl = to_double(key, v);
    } else if (key == "dt_power") {
      cfg.dt_power = to_int(key, v);
    } else if (key == "t_final") {
      cfg.t_final = to_double(key, v);
    } else if (key == "alpha_r") {
      cfg.alpha_r = to_double(key, v);
    } else if (key == "epsilon") {
      cfg.epsilon = to_double(key, v);
    } else if (key == "out") {
      cfg.out_dir = v;
    } else if (key == "threads") {
      cfg.threads = to_int(key, v);
    } else if (key == "paper_grid") {
      cfg.paper_grid = to_bool(key, v);
    } else if (key == "schemes") {
      cfg.schemes.clear();
      for (const auto& s : split_list(v)) cfg.schemes.push_back(to_scheme(s));
    } else if (key == "grids") {
      cfg.grids.clear();
      for (const auto& s : split_list(v)) cfg.grids.push_back(to_int(key, s));
    } else if (key == "critical_sign") {
      if (v == "+1" || v == "1" || v == "positive")
        cfg.critical_positive = true;
      else if (v == "-1" || v == "negative")
        cfg.critical_positive = false;
      else
        throw ConfigError("setting 'critical_sign': expected -1 or +1, got '" + v + "'");
    } else if (key == "write") {
      cfg.write_files = to_bool(key, v);
    } else if (key == "reference") {
      cfg.compute_reference = to_bool(key, v);
    } else {
      std::string valid;
      for (const auto& k : known_keys()) valid += " " + k;
      throw ConfigError("unknown setting '" + key + "'; valid keys:" + valid);
    }
  }
}

std::optional<RunConfig> parse_config(int argc, const char* const* argv) {
  CLI::App app{"WENO finite-difference solver and benchmark runner"};
  app.require_subcommand(1);

  // option name, config key, help; values are parsed by apply_settings
  struct ValueOpt {
    const char* name;
    const char* key;
    const char* help;
  };
  const ValueOpt value_opts[] = {
      {"--problem", "problem", "catalog name (see list)"},
      {"--scheme", "scheme", "js, z, nw6, cu6 or theta6"},
      {"--n", "n", "grid intervals in x"},
      {"--ny", "ny", "grid intervals in y (2D only)"},
      {"--cfl", "cfl", "CFL number"},
      {"--dt-power", "dt_power", "fixed step dt = dx^p"},
      {"--t-final", "t_final", "final time"},
      {"--alpha-r", "alpha_r", "theta6 cutoff"},
      {"--epsilon", "epsilon", "smoothness-indicator epsilon"},
      {"--out", "out", "output directory"},
      {"--threads", "threads", "OpenMP threads"},
      {"--schemes", "schemes", "comma-separated schemes for compare"},
      {"--grids", "grids", "comma-separated grids for converge"},
      {"--critical-sign", "critical_sign", "-1 or 1, sign of the critical profile"}};

  std::map<std::string, std::string> values;
  std::string config_path;
  bool paper_grid = false, no_write = false, no_reference = false;
  std::vector<CLI::App*> subs;
  std::map<CLI::App*, std::vector<std::pair<CLI::Option*, std::string>>> bound;

  for (const auto& [name, desc] :
       std::vector<std::pair<std::string, std::string>>{
           {"run", "solve one problem with one scheme"},
           {"compare", "solve one problem with several schemes"},
           {"converge", "error table over a list of grids"},
           {"list", "print the problem catalog"}}) {
    CLI::App* sub = app.add_subcommand(name, desc);
    subs.push_back(sub);
    if (name == "list") continue;
    for (const ValueOpt& v : value_opts) {
      CLI::Option* o = sub->add_option(v.name, values[v.key], v.help);
      bound[sub].emplace_back(o, v.key);
    }
    sub->add_option("--config", config_path, "key=value settings file");
    bound[sub].emplace_back(sub->add_flag("--paper-grid", paper_grid, "full-size 2D grids"),
                            "paper_grid");
    bound[sub].emplace_back(sub->add_flag("--no-write", no_write, "skip output files"), "write");
    bound[sub].emplace_back(
        sub->add_flag("--no-reference", no_reference, "skip fine-grid reference runs"),
        "reference");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig cfg;
  cfg.out_dir = default_out_dir();
  CLI::App* used = nullptr;
  for (CLI::App* s : subs)
    if (s->parsed()) used = s;
  cfg.command = used->get_name();
  if (cfg.command == "list") return cfg;

  if (!config_path.empty()) apply_settings(cfg, read_config_file(config_path));

  std::map<std::string, std::string> given;
  for (const auto& [opt, key] : bound[used]) {
    if (opt->count() == 0) continue;
    if (key == "paper_grid")
      given[key] = "true";
    else if (key == "write")
      given[key] = no_write ? "false" : "true";
    else if (key == "reference")
      given[key] = no_reference ? "false" : "true";
    else
      given[key] = values[key];
  }
  apply_settings(cfg, given);
  if (cfg.command == "compare" && cfg.schemes.empty())
    cfg.schemes = {Scheme::JS, Scheme::Z, Scheme::NW6, Scheme::CU6, Scheme::Theta6};
  if (cfg.command == "converge" && cfg.grids.empty()) cfg.grids = {40, 80, 160, 320};
  validate_config(cfg);
  return cfg;
}

ProblemSpec resolve_problem(const RunConfig& cfg) {
  if (cfg.problem.empty()) {
    std::string valid;
    for (const auto& n : problem_names()) valid += " " + n;
    throw ConfigError("no problem given; valid problems:" + valid);
  }
  if (cfg.problem == "critical") return critical_problem(cfg.critical_positive);
  return find_problem(cfg.problem);
}

void validate_config(const RunConfig& cfg) {
  if (cfg.command == "list") return;
  const ProblemSpec spec = resolve_problem(cfg);
  if (cfg.ny && spec.dim() == 1)
    throw ConfigError("problem '" + spec.name + "' is 1D; --ny does not apply");
  if (cfg.n && *cfg.n < 6) throw ConfigError("n must be at least 6");
  if (cfg.ny && *cfg.ny < 6) throw ConfigError("ny must be at least 6");
  if (!(cfg.cfl > 0) || cfg.cfl > 1) throw ConfigError("cfl must lie in (0, 1]");
  if (cfg.dt_power && *cfg.dt_power < 1) throw ConfigError("dt power must be >= 1");
  if (cfg.t_final && !(*cfg.t_final >= 0)) throw ConfigError("t_final must be >= 0");
  if (cfg.alpha_r && !(*cfg.alpha_r >= 0)) throw ConfigError("alpha_r must be >= 0");
  if (cfg.epsilon && !(*cfg.epsilon > 0)) throw ConfigError("epsilon must be > 0");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (cfg.command == "converge") {
    if (spec.reference != ReferenceKind::ExactFunction &&
        spec.reference != ReferenceKind::ExactRiemann)
      throw ConfigError("converge needs a problem with an exact solution");
    if (cfg.grids.empty()) throw ConfigError("converge needs at least one grid");
    for (int g : cfg.grids)
      if (g < 6) throw ConfigError("grid sizes must be at least 6");
  }
  if (cfg.command == "compare" && cfg.schemes.empty())
    throw ConfigError("compare needs at least one scheme");
  make_grid(spec, cfg.n, cfg.ny, cfg.paper_grid);
}

SchemeConfig scheme_config(const RunConfig& cfg, const ProblemSpec& spec, Scheme scheme) {
  SchemeConfig s = SchemeConfig::defaults(scheme);
  s.alpha_r = cfg.alpha_r.value_or(spec.alpha_r);
  if (cfg.epsilon) s.epsilon = *cfg.epsilon;
  s.validate();
  return s;
}

StepControl step_control(const RunConfig& cfg, const ProblemSpec& spec) {
  StepControl ctl;
  ctl.cfl = cfg.cfl;
  ctl.t_final = cfg.t_final.value_or(spec.t_final);
  if (cfg.dt_power) {
    ctl.law = DtLaw::FixedPower;
    ctl.power = *cfg.dt_power;
  }
  ctl.validate();
  return ctl;
}

RunReport run(const RunConfig& cfg) {
  validate_config(cfg);
  set_threads(cfg.threads);
  const ProblemSpec spec = resolve_problem(cfg);
  const Grid grid = make_grid(spec, cfg.n, cfg.ny, cfg.paper_grid);
  const double t = cfg.t_final.value_or(spec.t_final);
  std::string label;
  const std::optional<Field> ref = comparison_field(cfg, spec, grid, t, label);
  return execute(cfg, spec, grid, cfg.scheme, ref, label, cfg.write_files);
}

std::vector<RunReport> compare(const RunConfig& cfg) {
  validate_config(cfg);
  set_threads(cfg.threads);
  const ProblemSpec spec = resolve_problem(cfg);
  const Grid grid = make_grid(spec, cfg.n, cfg.ny, cfg.paper_grid);
  const double t = cfg.t_final.value_or(spec.t_final);
  std::string label;
  const std::optional<Field> ref = comparison_field(cfg, spec, grid, t, label);

  std::vector<RunReport> reports;
  for (Scheme s : cfg.schemes) reports.push_back(execute(cfg, spec, grid, s, ref, label, cfg.write_files));

  if (cfg.write_files) {
    const fs::path dir = ensure_out_dir(cfg);
    const fs::path path = dir / (file_stem(spec, grid, "compare") + ".csv");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    const std::string q = components(spec.physics) == 1 ? "u" : "rho";
    os << "x";
    if (grid.y) os << ",y";
    for (const auto& r : reports) os << ',' << r.scheme << '_' << q;
    if (ref) os << ',' << label << '_' << q;
    os << '\n';
    for (int j = 0; j < grid.ny(); ++j)
      for (int i = 0; i < grid.nx(); ++i) {
        os << fmt17(grid.x.coord(i));
        if (grid.y) os << ',' << fmt17(grid.y->coord(j));
        for (const auto& r : reports) os << ',' << fmt17(r.solution.node(i, j)(0));
        if (ref) os << ',' << fmt17(ref->node(i, j)(0));
        os << '\n';
      }
    for (auto& r : reports) r.outputs.push_back(path.string());
  }
  return reports;
}

std::vector<ConvergenceRow> convergence_suite(const RunConfig& cfg) {
  RunConfig base = cfg;
  base.command = "converge";
  if (base.grids.empty()) base.grids = {40, 80, 160, 320};
  if (!base.dt_power) base.dt_power = 2;
  validate_config(base);
  set_threads(base.threads);
  const ProblemSpec spec = resolve_problem(base);

  std::vector<ConvergenceRow> rows;
  for (int n : base.grids) {
    ConvergenceRow row;
    row.n = n;
    try {
      const Grid grid = make_grid(spec, n);
      const double t = base.t_final.value_or(spec.t_final);
      std::string label;
      const std::optional<Field> ref = comparison_field(base, spec, grid, t, label);
      const RunReport r = execute(base, spec, grid, base.scheme, ref, label, false);
      row.l1 = r.l1.value_or(0);
      row.linf = r.linf.value_or(0);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  fill_orders(rows);

  if (base.write_files) {
    const fs::path dir = ensure_out_dir(base);
    const std::string stem = spec.name + "_" + std::string(scheme_name(base.scheme)) + "_convergence";
    write_text(dir / (stem + ".txt"),
               convergence_table_text(rows, spec.name + " / " + std::string(scheme_name(base.scheme))));
    write_text(dir / (stem + ".csv"), convergence_table_csv(rows));
  }
  return rows;
}

std::string field_header(Physics physics) {
  switch (physics) {
    case Physics::LinearAdvection:
    case Physics::Burgers:
      return "x,u";
    case Physics::Euler1D:
      return "x,rho,u,p,E,mom_x";
    case Physics::Euler2D:
      return "x,y,rho,u,v,p,E,mom_x,mom_y";
  }
  return "";
}

void write_field(const Field& f, Physics physics, double gamma, const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  const Grid& g = f.grid;
  os << field_header(physics) << '\n';
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const auto c = f.node(i, j);
      os << fmt17(g.x.coord(i));
      if (g.y) os << ',' << fmt17(g.y->coord(j));
      switch (physics) {
        case Physics::LinearAdvection:
        case Physics::Burgers:
          os << ',' << fmt17(c(0));
          break;
        case Physics::Euler1D: {
          const double u = c(1) / c(0);
          const double p = (gamma - 1) * (c(2) - 0.5 * c(1) * u);
          os << ',' << fmt17(c(0)) << ',' << fmt17(u) << ',' << fmt17(p) << ',' << fmt17(c(2))
             << ',' << fmt17(c(1));
          break;
        }
        case Physics::Euler2D: {
          const double u = c(1) / c(0), v = c(2) / c(0);
          const double p = (gamma - 1) * (c(3) - 0.5 * (c(1) * u + c(2) * v));
          os << ',' << fmt17(c(0)) << ',' << fmt17(u) << ',' << fmt17(v) << ',' << fmt17(p)
             << ',' << fmt17(c(3)) << ',' << fmt17(c(1)) << ',' << fmt17(c(2));
          break;
        }
      }
      os << '\n';
    }
  }
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

void write_meta(const RunConfig& cfg, const ProblemSpec& spec, const Grid& grid, double t,
                Scheme scheme, const fs::path& path) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "schema_version=" << kFieldSchemaVersion << '\n'
     << "problem=" << spec.name << '\n'
     << "physics=" << physics_name(spec.physics) << '\n'
     << "scheme=" << scheme_name(scheme) << '\n'
     << "x_lo=" << grid.x.lo << '\n'
     << "x_hi=" << grid.x.hi << '\n'
     << "n=" << grid.x.n << '\n';
  if (grid.y)
    os << "y_lo=" << grid.y->lo << '\n' << "y_hi=" << grid.y->hi << '\n' << "ny=" << grid.y->n << '\n';
  os << "t=" << t << '\n';
  char hash[20];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cfg.hash()));
  os << "config_hash=" << hash << '\n';
  write_text(path, os.str());
}

Field read_field(const fs::path& path, const Grid& grid, Physics physics) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  std::getline(is, line);
  if (trim(line) != field_header(physics))
    throw std::runtime_error("unexpected header in " + path.string());
  Field f(grid, components(physics));
  const int skip = grid.y ? 2 : 1;
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      if (!std::getline(is, line)) throw std::runtime_error("truncated field file " + path.string());
      std::vector<double> v;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) v.push_back(std::strtod(cell.c_str(), nullptr));
      auto c = f.node(i, j);
      switch (physics) {
        case Physics::LinearAdvection:
        case Physics::Burgers:
          c(0) = v.at(skip);
          break;
        case Physics::Euler1D:
          c << v.at(skip), v.at(skip + 4), v.at(skip + 3);
          break;
        case Physics::Euler2D:
          c << v.at(skip), v.at(skip + 5), v.at(skip + 6), v.at(skip + 4);
          break;
      }
    }
  return f;
}

std::string report_json(const RunReport& r) {
  nlohmann::json j;
  j["problem"] = r.problem;
  j["scheme"] = r.scheme;
  j["n"] = r.n;
  if (r.ny) j["ny"] = r.ny;
  j["t_final"] = r.t_final;
  j["steps"] = r.steps;
  j["wall_seconds"] = r.wall_seconds;
  if (r.l1) {
    j["errors"] = {{"quantity", r.error_quantity},
                   {"reference", r.reference},
                   {"l1", *r.l1},
                   {"linf", r.linf.value_or(0)}};
  }
  if (r.symmetry_error) j["symmetry_error"] = *r.symmetry_error;
  auto vec = [](const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
  };
  j["totals_initial"] = vec(r.totals_initial);
  j["totals_final"] = vec(r.totals_final);
  j["outputs"] = r.outputs;
  return j.dump(2) + "\n";
}

std::string report_summary(const RunReport& r) {
  std::ostringstream os;
  os << r.problem << " / " << r.scheme << "  n=" << r.n;
  if (r.ny) os << "x" << r.ny;
  os << "  t=" << r.t_final << "  steps=" << r.steps << "  wall=" << std::fixed
     << std::setprecision(2) << r.wall_seconds << "s" << std::defaultfloat;
  if (r.l1)
    os << "\n  L1(" << r.error_quantity << ") = " << format_error(*r.l1) << "  Linf = "
       << format_error(r.linf.value_or(0)) << "  [" << r.reference << "]";
  if (r.symmetry_error) os << "\n  symmetry error = " << format_error(*r.symmetry_error);
  for (const auto& o : r.outputs) os << "\n  wrote " << o;
  return os.str();
}

}  // namespace weno
