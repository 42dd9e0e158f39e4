#include <cstdio>
#include <iostream>

#include "weno/errors.hpp"
#include "weno/euler.hpp"
#include "weno/runner.hpp"

namespace {

int list_problems() {
  for (const auto& p : weno::catalog()) {
    std::printf("%-16s %s\n", p.name.c_str(), p.description.c_str());
  }
  return weno::kExitOk;
}

int dispatch(const weno::RunConfig& cfg) {
  if (cfg.command == "list") return list_problems();
  if (cfg.command == "run") {
    std::cout << weno::report_summary(weno::run(cfg)) << "\n";
    return weno::kExitOk;
  }
  if (cfg.command == "compare") {
    for (const auto& r : weno::compare(cfg)) std::cout << weno::report_summary(r) << "\n";
    return weno::kExitOk;
  }
  const auto spec = weno::resolve_problem(cfg);
  const auto rows = weno::convergence_suite(cfg);
  std::cout << weno::convergence_table_text(
      rows, spec.name + " / " + std::string(weno::scheme_name(cfg.scheme)));
  for (const auto& r : rows)
    if (!r.error.empty()) return weno::kExitNumerical;
  return weno::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const auto cfg = weno::parse_config(argc, argv);
    if (!cfg) return weno::kExitOk;
    return dispatch(*cfg);
  } catch (const weno::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return weno::kExitConfig;
  } catch (const weno::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return weno::kExitNumerical;
  } catch (const weno::DomainError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return weno::kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return weno::kExitFailure;
  }
}
