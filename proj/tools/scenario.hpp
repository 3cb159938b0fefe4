#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lindosc/dynamics.hpp"

// Scenario plumbing for the command-line tool: config parsing, CSV emission,
// and the subcommand bodies. Everything here writes deterministic output --
// fixed field order, fixed formatting -- so repeated runs are byte-identical.

namespace lindosc::cli {

struct ScenarioConfig {
  LindbladParams params;
  InitialConditions ic;
  std::optional<EquationMode> mode;
  double t_end = 20.0;
  double dt_out = 0.01;
  bool normalize = false;
};

// Flat key=value file; '#' starts a comment line; blank lines are skipped.
// Recognized keys: omega, gamma, h11, h33, h13r, mode, a1, b1, mR0, mP0,
// t_end, dt_out, normalize. Unknown or duplicate keys are errors
// (std::invalid_argument), as are malformed values.
ScenarioConfig load_config(const std::string& path);

// "as-printed" or "rederived"; anything else throws std::invalid_argument.
EquationMode parse_mode(const std::string& text);

// 17 significant digits, scientific; non-finite values as inf/-inf/nan.
std::string format_double(double v);

// Subcommand bodies; each returns the process exit code.
int cmd_simulate(const ScenarioConfig& cfg, const std::string& out_dir, std::ostream& out);
int cmd_sweep(const ScenarioConfig& cfg, const std::vector<double>& values,
              const std::string& out_dir, std::ostream& out);
int cmd_thermal(double temperature, double gamma, std::optional<EquationMode> mode,
                std::ostream& out);
int cmd_audit(const ScenarioConfig& cfg, std::ostream& out);
int cmd_validate(std::ostream& out);

}  // namespace lindosc::cli
