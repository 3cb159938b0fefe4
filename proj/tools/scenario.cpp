#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lindosc/length_scales.hpp"
#include "lindosc/validation.hpp"

namespace lindosc::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key + "' has non-numeric value '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("config: key '" + key + "' has trailing junk in '" + text + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument("config: key '" + key + "' must be true or false, got '" + text +
                              "'");
}

}  // namespace

EquationMode parse_mode(const std::string& text) {
  if (text == "as-printed") return EquationMode::AsPrinted;
  if (text == "rederived") return EquationMode::Rederived;
  throw std::invalid_argument("mode must be 'as-printed' or 'rederived', got '" + text + "'");
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");

  ScenarioConfig cfg;
  std::map<std::string, bool> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not of the form key=value");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (seen[key])
      throw std::invalid_argument("config: duplicate key '" + key + "'");
    seen[key] = true;

    if (key == "omega") cfg.params.omega = parse_number(key, val);
    else if (key == "gamma") cfg.params.gamma = parse_number(key, val);
    else if (key == "h11") cfg.params.h11 = parse_number(key, val);
    else if (key == "h33") cfg.params.h33 = parse_number(key, val);
    else if (key == "h13r") cfg.params.h13r = parse_number(key, val);
    else if (key == "mode") cfg.mode = parse_mode(val);
    else if (key == "a1") cfg.ic.a1 = parse_number(key, val);
    else if (key == "b1") cfg.ic.b1 = parse_number(key, val);
    else if (key == "mR0") cfg.ic.mean_r = parse_number(key, val);
    else if (key == "mP0") cfg.ic.mean_p = parse_number(key, val);
    else if (key == "t_end") cfg.t_end = parse_number(key, val);
    else if (key == "dt_out") cfg.dt_out = parse_number(key, val);
    else if (key == "normalize") cfg.normalize = parse_bool(key, val);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  if (!(cfg.t_end > 0.0) || !std::isfinite(cfg.t_end))
    throw std::invalid_argument("config: t_end must be positive and finite");
  if (!(cfg.dt_out > 0.0) || !std::isfinite(cfg.dt_out))
    throw std::invalid_argument("config: dt_out must be positive and finite");
  return cfg;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // canonicalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

namespace {

std::vector<double> output_times(double t_end, double dt_out) {
  long n = static_cast<long>(std::floor(t_end / dt_out + 1e-9));
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) times.push_back(static_cast<double>(k) * dt_out);
  return times;
}

// Purity with no validity gate: honest values above one or nan when the
// uncertainty product has left the meaningful range.
double purity_column(const GaussianMoments& m) {
  double w = uncertainty_product(m);
  if (w >= kUncertaintyBound - kUncertaintyTol)
    return 1.0 / (2.0 * std::sqrt(std::max(w, kUncertaintyBound)));
  if (w > 0.0) return 1.0 / (2.0 * std::sqrt(w));
  return std::numeric_limits<double>::quiet_NaN();
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, bool normalize) {
  if (!traj.physical) {
    os << "# FLAGGED unphysical state first at tau="
       << format_double(traj.times[traj.first_unphysical]) << " (row "
       << traj.first_unphysical << ")\n";
  }
  const LengthScales& base = traj.lengths.front();
  double w0 = uncertainty_product(traj.states.front());
  bool mix_normalizable = std::isfinite(base.d_mix);
  if (normalize && !mix_normalizable)
    os << "# d_mix column left unnormalized (initial value is not finite)\n";

  os << "tau,A,B,C,mR,mP,omega_sq,purity,d_corr,d_decoh,d_mix,uncertainty\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const GaussianMoments& m = traj.states[i];
    const LengthScales& ls = traj.lengths[i];
    double w = uncertainty_product(m);
    double d_corr = ls.d_corr, d_decoh = ls.d_decoh, d_mix = ls.d_mix, unc = w;
    if (normalize) {
      d_corr /= base.d_corr;
      d_decoh /= base.d_decoh;
      if (mix_normalizable) d_mix /= base.d_mix;
      unc = w / w0;
    }
    os << format_double(traj.times[i]) << ',' << format_double(m.var_p) << ','
       << format_double(-m.cov_rp) << ',' << format_double(m.var_r) << ','
       << format_double(m.mean_r) << ',' << format_double(m.mean_p) << ','
       << format_double(w) << ',' << format_double(purity_column(m)) << ','
       << format_double(d_corr) << ',' << format_double(d_decoh) << ','
       << format_double(d_mix) << ',' << format_double(unc) << '\n';
  }
}

struct ScenarioRun {
  MomentSystem sys;
  Trajectory traj;
};

ScenarioRun run_scenario(const ScenarioConfig& cfg, EquationMode mode) {
  ScenarioRun run;
  run.sys = moment_system(cfg.params, mode);
  run.traj = propagate(run.sys, cfg.ic, output_times(cfg.t_end, cfg.dt_out));
  return run;
}

double convergence_tau(const ScenarioRun& run, const Vec3& xinf) {
  double denom = inf_norm(xinf);
  if (!(denom > 0.0)) denom = 1.0;
  for (std::size_t i = 0; i < run.traj.times.size(); ++i) {
    const GaussianMoments& m = run.traj.states[i];
    Vec3 x = {m.var_p, -m.cov_rp, m.var_r};
    if (inf_norm(sub(x, xinf)) / denom <= 1e-3) return run.traj.times[i];
  }
  return std::numeric_limits<double>::infinity();
}

void write_file_or_throw(const std::string& path, const Trajectory& traj, bool normalize) {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file '" + path + "'");
  write_trajectory_csv(os, traj, normalize);
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

GaussianMoments dispersion_state(const Vec3& x) {
  GaussianMoments m;
  m.var_p = x[0];
  m.cov_rp = -x[1];
  m.var_r = x[2];
  return m;
}

}  // namespace

int cmd_simulate(const ScenarioConfig& cfg, const std::string& out_dir, std::ostream& out) {
  EquationMode mode = cfg.mode.value();
  ScenarioRun run = run_scenario(cfg, mode);
  std::string path = out_dir + "/trajectory.csv";
  write_file_or_throw(path, run.traj, cfg.normalize);

  out << "# simulate summary\n";
  out << "mode=" << to_string(mode) << '\n';
  out << "file=" << path << '\n';
  out << "rows=" << run.traj.times.size() << '\n';
  out << "flagged=" << (run.traj.physical ? "false" : "true") << '\n';
  if (!run.traj.physical)
    out << "first_unphysical_tau=" << format_double(run.traj.times[run.traj.first_unphysical])
        << '\n';
  if (cfg.params.gamma > 0.0) {
    Vec3 xinf = stationary_solve(run.sys);
    Vec3 formula = stationary_formula(cfg.params);
    out << "fixed_point_A=" << format_double(xinf[0]) << '\n';
    out << "fixed_point_B=" << format_double(xinf[1]) << '\n';
    out << "fixed_point_C=" << format_double(xinf[2]) << '\n';
    out << "closed_form_A=" << format_double(formula[0]) << '\n';
    out << "closed_form_B=" << format_double(formula[1]) << '\n';
    out << "closed_form_C=" << format_double(formula[2]) << '\n';
    out << "convergence_tau=" << format_double(convergence_tau(run, xinf)) << '\n';
  } else {
    out << "# undamped run: no fixed point\n";
  }
  return run.traj.physical ? 0 : 3;
}

int cmd_sweep(const ScenarioConfig& cfg, const std::vector<double>& values,
              const std::string& out_dir, std::ostream& out) {
  if (values.empty()) throw std::invalid_argument("sweep: value list must not be empty");
  EquationMode mode = cfg.mode.value();

  out << "# sweep over h13r (" << values.size() << " values, mode=" << to_string(mode) << ")\n";
  bool any_bad = false;
  std::vector<std::pair<double, double>> asymptotes;  // (value, normalized d_decoh)
  for (double v : values) {
    ScenarioConfig c = cfg;
    c.params.h13r = v;
    c.normalize = true;
    char vtxt[32];
    std::snprintf(vtxt, sizeof vtxt, "%g", v);
    out << "value=" << vtxt << '\n';
    try {
      ScenarioRun run = run_scenario(c, mode);
      std::string path = out_dir + "/sweep_h13r_" + vtxt + ".csv";
      write_file_or_throw(path, run.traj, true);
      out << "file=" << path << '\n';
      out << "status=" << (run.traj.physical ? "ok" : "flagged") << '\n';
      any_bad = any_bad || !run.traj.physical;

      double lhs = c.params.h11 * c.params.h33;
      double rhs = v * v + c.params.gamma * c.params.gamma;
      out << "coupling_ok=" << (lhs >= rhs ? "true" : "false") << '\n';

      const LengthScales& base = run.traj.lengths.front();
      double w0 = uncertainty_product(run.traj.states.front());
      if (c.params.gamma > 0.0) {
        LengthScales linf = length_scales_unchecked(dispersion_state(stationary_solve(run.sys)));
        double add = linf.d_decoh / base.d_decoh;
        double aunc = linf.omega_sq / w0;
        out << "asymptotic_d_decoh=" << format_double(add) << '\n';
        out << "asymptotic_uncertainty=" << format_double(aunc) << '\n';
        if (run.traj.physical && std::isfinite(add)) asymptotes.emplace_back(v, add);
      } else {
        out << "asymptotic_d_decoh=nan\n";
        out << "asymptotic_uncertainty=nan\n";
      }

      // Time windows where the normalized decoherence length exceeds one.
      std::string windows;
      bool open = false;
      double start = 0.0, last = 0.0;
      for (std::size_t i = 0; i < run.traj.times.size(); ++i) {
        bool above = run.traj.lengths[i].d_decoh / base.d_decoh > 1.0;
        if (above && !open) {
          open = true;
          start = run.traj.times[i];
        }
        if (above) last = run.traj.times[i];
        if (!above && open) {
          open = false;
          char w[80];
          std::snprintf(w, sizeof w, "%g..%g", start, last);
          if (!windows.empty()) windows += ';';
          windows += w;
        }
      }
      if (open) {
        char w[80];
        std::snprintf(w, sizeof w, "%g..%g", start, last);
        if (!windows.empty()) windows += ';';
        windows += w;
      }
      out << "decoh_above_unity_windows=" << (windows.empty() ? "none" : windows) << '\n';
    } catch (const std::exception& e) {
      out << "status=error\n";
      out << "message=" << e.what() << '\n';
      any_bad = true;
    }
  }

  std::stable_sort(asymptotes.begin(), asymptotes.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  out << "# asymptotic normalized d_decoh ordering (largest first):";
  if (asymptotes.empty()) {
    out << " n/a";
  } else {
    for (std::size_t i = 0; i < asymptotes.size(); ++i) {
      char vtxt[32];
      std::snprintf(vtxt, sizeof vtxt, "%g", asymptotes[i].first);
      out << (i == 0 ? " " : " > ") << vtxt;
    }
  }
  out << '\n';
  return any_bad ? 4 : 0;
}

int cmd_thermal(double temperature, double gamma, std::optional<EquationMode> mode,
                std::ostream& out) {
  GaussianMoments state = thermal_state(temperature);
  LengthScales ls = thermal_lengths(temperature);
  ThermalCalibration ap = thermal_calibration(temperature, gamma, EquationMode::AsPrinted);
  ThermalCalibration red = thermal_calibration(temperature, gamma, EquationMode::Rederived);

  out << "# thermal equilibrium report\n";
  out << "T=" << format_double(temperature) << '\n';
  out << "gamma=" << format_double(gamma) << '\n';
  out << "# state moments\n";
  out << "A=" << format_double(state.var_p) << '\n';
  out << "B=" << format_double(-state.cov_rp) << '\n';
  out << "C=" << format_double(state.var_r) << '\n';
  out << "omega_sq=" << format_double(uncertainty_product(state)) << '\n';
  out << "purity=" << format_double(purity(state)) << '\n';
  out << "# length scales\n";
  out << "d_corr=" << format_double(ls.d_corr) << '\n';
  out << "d_decoh=" << format_double(ls.d_decoh) << '\n';
  out << "d_mix=" << format_double(ls.d_mix) << '\n';
  out << "# couplings that hold this state stationary, by convention\n";
  out << "h11_as_printed=" << format_double(ap.params.h11) << '\n';
  out << "h33_as_printed=" << format_double(ap.params.h33) << '\n';
  out << "h13r_as_printed=" << format_double(ap.params.h13r) << '\n';
  out << "note_as_printed=" << ap.note << '\n';
  out << "h11_rederived=" << format_double(red.params.h11) << '\n';
  out << "h33_rederived=" << format_double(red.params.h33) << '\n';
  out << "h13r_rederived=" << format_double(red.params.h13r) << '\n';
  out << "note_rederived=" << red.note << '\n';
  if (mode) {
    const ThermalCalibration& sel = *mode == EquationMode::AsPrinted ? ap : red;
    out << "mode=" << to_string(*mode) << '\n';
    out << "h11=" << format_double(sel.params.h11) << '\n';
    out << "h33=" << format_double(sel.params.h33) << '\n';
    out << "h13r=" << format_double(sel.params.h13r) << '\n';
  }
  return 0;
}

namespace {

void write_mode_audit(std::ostream& out, const char* prefix, const ModeAudit& a) {
  for (int i = 0; i < 3; ++i)
    out << prefix << "_eig_" << i + 1 << '='
        << format_double(a.dispersion_eigenvalues[static_cast<std::size_t>(i)].real()) << ','
        << format_double(a.dispersion_eigenvalues[static_cast<std::size_t>(i)].imag()) << '\n';
  out << prefix << "_mean_eig=" << format_double(a.mean_eigenvalues[0].real()) << ','
      << format_double(a.mean_eigenvalues[0].imag()) << '\n';
  const char* abc = "ABC";
  for (int i = 0; i < 3; ++i)
    out << prefix << "_fixed_point_" << abc[i] << '='
        << format_double(a.fixed_point[static_cast<std::size_t>(i)]) << '\n';
  for (int i = 0; i < 3; ++i)
    out << prefix << "_formula_residual_" << abc[i] << '='
        << format_double(a.formula_residual[static_cast<std::size_t>(i)]) << '\n';
  if (a.thermal_residual) {
    out << prefix << "_thermal_residual=" << format_double(*a.thermal_residual) << '\n';
    out << prefix << "_implied_temperature=" << format_double(*a.implied_temperature) << '\n';
  }
}

}  // namespace

int cmd_audit(const ScenarioConfig& cfg, std::ostream& out) {
  AuditReport rep = audit(cfg.params);
  out << "# consistency audit\n";
  out << "omega=" << format_double(cfg.params.omega) << '\n';
  out << "gamma=" << format_double(cfg.params.gamma) << '\n';
  out << "h11=" << format_double(cfg.params.h11) << '\n';
  out << "h33=" << format_double(cfg.params.h33) << '\n';
  out << "h13r=" << format_double(cfg.params.h13r) << '\n';
  out << "# closed-form stationary values\n";
  const char* abc = "ABC";
  for (int i = 0; i < 3; ++i)
    out << "closed_form_" << abc[i] << '='
        << format_double(rep.formula_stationary[static_cast<std::size_t>(i)]) << '\n';
  out << "# as-printed branch\n";
  write_mode_audit(out, "as_printed", rep.as_printed);
  out << "# rederived branch\n";
  write_mode_audit(out, "rederived", rep.rederived);
  out << "# pairwise stationary-state gaps (inf-norm)\n";
  out << "gap_as_printed_vs_rederived=" << format_double(rep.fixed_point_gap) << '\n';
  out << "gap_closed_form_vs_as_printed="
      << format_double(inf_norm(sub(rep.formula_stationary, rep.as_printed.fixed_point))) << '\n';
  out << "gap_closed_form_vs_rederived="
      << format_double(inf_norm(sub(rep.formula_stationary, rep.rederived.fixed_point))) << '\n';
  out << "coupling_lhs=" << format_double(rep.coupling_lhs) << '\n';
  out << "coupling_rhs=" << format_double(rep.coupling_rhs) << '\n';
  out << "coupling_ok=" << (rep.coupling_ok ? "true" : "false") << '\n';
  if (!rep.coupling_ok)
    out << "# warning: coupling inequality violated (h11*h33 < h13r^2 + gamma^2); "
           "the generator is not completely positive\n";
  return 0;
}

int cmd_validate(std::ostream& out) {
  auto results = run_validation_suite();
  int passed = 0;
  for (const auto& c : results) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    if (c.pass) ++passed;
  }
  out << "# " << passed << '/' << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace lindosc::cli
