#include "lindosc/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace lindosc {

const char* to_string(EquationMode mode) {
  return mode == EquationMode::AsPrinted ? "as-printed" : "rederived";
}

void require_valid_params(const LindbladParams& p) {
  bool finite = std::isfinite(p.omega) && std::isfinite(p.gamma) && std::isfinite(p.h11) &&
                std::isfinite(p.h33) && std::isfinite(p.h13r);
  if (!finite) throw std::invalid_argument("params: non-finite value");
  if (!(p.omega > 0.0)) throw std::invalid_argument("params: omega must be positive");
  if (p.gamma < 0.0) throw std::invalid_argument("params: gamma must be non-negative");
  if (p.h11 < 0.0 || p.h33 < 0.0)
    throw std::invalid_argument("params: diagonal noise strengths must be non-negative");
}

MomentSystem moment_system(const LindbladParams& p, EquationMode mode) {
  require_valid_params(p);
  MomentSystem sys;
  sys.mode = mode;
  sys.params = p;
  double g2 = 2.0 * p.gamma;
  double w2 = p.omega * p.omega;
  Mat3& m = sys.drift;
  if (mode == EquationMode::AsPrinted) {
    m(0, 0) = -g2; m(0, 1) = -2.0 * w2; m(0, 2) = 0.0;
    m(1, 0) = 1.0; m(1, 1) = -g2;       m(1, 2) = -2.0 * w2;
    m(2, 0) = 0.0; m(2, 1) = 2.0;       m(2, 2) = -g2;
    sys.drive = {p.h11, -p.h13r, p.h33};
  } else {
    m(0, 0) = -g2;  m(0, 1) = 2.0 * w2; m(0, 2) = 0.0;
    m(1, 0) = -1.0; m(1, 1) = -g2;      m(1, 2) = w2;
    m(2, 0) = 0.0;  m(2, 1) = -2.0;     m(2, 2) = -g2;
    sys.drive = {p.h11, p.h13r, p.h33};
  }
  sys.mean_drift(0, 0) = -p.gamma; sys.mean_drift(0, 1) = -1.0;
  sys.mean_drift(1, 0) = w2;       sys.mean_drift(1, 1) = -p.gamma;
  return sys;
}

GaussianMoments initial_state(const InitialConditions& ic) {
  GaussianMoments m;
  m.var_p = ic.a1;
  m.cov_rp = 0.0;
  m.var_r = ic.b1;
  m.mean_r = ic.mean_r;
  m.mean_p = ic.mean_p;
  require_valid_state(m);
  return m;
}

Vec3 stationary_formula(const LindbladParams& p) {
  require_valid_params(p);
  if (!(p.gamma > 0.0))
    throw std::invalid_argument("stationary_formula: requires gamma > 0");
  double g = p.gamma;
  double g2 = g * g;
  double denom = g * (g2 + 4.0);
  double a = (p.h11 * (g2 + 2.0) + 2.0 * p.h33 + 2.0 * g * p.h13r) / denom;
  double b = (p.h11 - p.h33 - 2.0 * g * p.h13r) / (g2 + 4.0);
  double c = (2.0 * p.h11 + p.h33 * (g2 + 2.0) - 2.0 * g * p.h13r) / denom;
  return {a, b, c};
}

Vec3 stationary_solve(const MomentSystem& sys) {
  if (!(sys.params.gamma > 0.0))
    throw std::invalid_argument("stationary_solve: requires gamma > 0");
  return solve3(sys.drift, scale(-1.0, sys.drive));
}

namespace {

void require_times(std::span<const double> times) {
  if (times.empty()) throw std::invalid_argument("propagate: empty time grid");
  if (!std::isfinite(times[0]) || times[0] < 0.0)
    throw std::invalid_argument("propagate: times must start at a finite value >= 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] <= times[i - 1])
      throw std::invalid_argument("propagate: times must be finite and strictly increasing");
  }
}

bool point_physical(const GaussianMoments& m) {
  return std::isfinite(m.var_p) && std::isfinite(m.cov_rp) && std::isfinite(m.var_r) &&
         std::isfinite(m.mean_r) && std::isfinite(m.mean_p) && m.var_p > 0.0 && m.var_r > 0.0 &&
         uncertainty_product(m) >= kUncertaintyBound - kTrajectorySlack;
}

void finalize_trajectory(Trajectory& traj) {
  traj.lengths.reserve(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    traj.lengths.push_back(length_scales_unchecked(traj.states[i]));
    if (traj.physical && !point_physical(traj.states[i])) {
      traj.physical = false;
      traj.first_unphysical = i;
    }
  }
}

}  // namespace

Trajectory propagate(const MomentSystem& sys, const InitialConditions& ic,
                     std::span<const double> times) {
  require_valid_params(sys.params);
  GaussianMoments m0 = initial_state(ic);
  require_times(times);

  UniformDampingSplit split = split_uniform_damping(sys.drift);
  bool damped = sys.params.gamma > 0.0;
  Vec3 x0 = {m0.var_p, -m0.cov_rp, m0.var_r};
  Vec3 xinf{};
  if (damped) xinf = stationary_solve(sys);
  Vec2 mean0 = {m0.mean_r, m0.mean_p};

  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.states.reserve(times.size());
  for (double tau : times) {
    Mat3 e = expm(split, tau);
    Vec3 x = damped ? add(mul(e, sub(x0, xinf)), xinf)
                    : add(mul(e, x0), mul(expm_integral_undamped(split, tau), sys.drive));
    Vec2 mm = mul(expm_rotational(sys.mean_drift, tau), mean0);
    GaussianMoments m;
    m.var_p = x[0];
    m.cov_rp = -x[1];
    m.var_r = x[2];
    m.mean_r = mm[0];
    m.mean_p = mm[1];
    traj.states.push_back(m);
  }
  finalize_trajectory(traj);
  return traj;
}

std::vector<std::array<double, 5>> integrate_moments_rk4(const MomentSystem& sys,
                                                         const std::array<double, 5>& y0,
                                                         long steps, double dt) {
  if (steps < 0 || !(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("integrate_moments_rk4: bad step count or step size");

  auto deriv = [&sys](const std::array<double, 5>& y) {
    Vec3 x = {y[0], y[1], y[2]};
    Vec3 xdot = add(mul(sys.drift, x), sys.drive);
    Vec2 mdot = mul(sys.mean_drift, {y[3], y[4]});
    return std::array<double, 5>{xdot[0], xdot[1], xdot[2], mdot[0], mdot[1]};
  };

  std::vector<std::array<double, 5>> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  std::array<double, 5> y = y0;
  out.push_back(y);
  for (long k = 0; k < steps; ++k) {
    std::array<double, 5> k1 = deriv(y);
    std::array<double, 5> tmp;
    for (int i = 0; i < 5; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    std::array<double, 5> k2 = deriv(tmp);
    for (int i = 0; i < 5; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    std::array<double, 5> k3 = deriv(tmp);
    for (int i = 0; i < 5; ++i) tmp[i] = y[i] + dt * k3[i];
    std::array<double, 5> k4 = deriv(tmp);
    for (int i = 0; i < 5; ++i)
      y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    out.push_back(y);
  }
  return out;
}

Trajectory propagate_numeric(const MomentSystem& sys, const InitialConditions& ic,
                             double t_end, double dt) {
  require_valid_params(sys.params);
  GaussianMoments m0 = initial_state(ic);
  if (!std::isfinite(t_end) || !(t_end > 0.0))
    throw std::invalid_argument("propagate_numeric: t_end must be positive and finite");
  double cap = 0.1 / std::max({1.0, sys.params.gamma, sys.params.omega * sys.params.omega});
  if (!std::isfinite(dt) || !(dt > 0.0) || dt > cap * (1.0 + 1e-12))
    throw std::invalid_argument("propagate_numeric: dt must lie in (0, 0.1/max(1, gamma, omega^2)]");

  long steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
  std::array<double, 5> y0 = {m0.var_p, -m0.cov_rp, m0.var_r, m0.mean_r, m0.mean_p};
  auto rows = integrate_moments_rk4(sys, y0, steps, dt);

  Trajectory traj;
  traj.times.reserve(rows.size());
  traj.states.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    traj.times.push_back(static_cast<double>(k) * dt);
    GaussianMoments m;
    m.var_p = rows[k][0];
    m.cov_rp = -rows[k][1];
    m.var_r = rows[k][2];
    m.mean_r = rows[k][3];
    m.mean_p = rows[k][4];
    traj.states.push_back(m);
  }
  finalize_trajectory(traj);
  return traj;
}

ThermalCalibration thermal_calibration(double temperature, double gamma, EquationMode mode) {
  if (!std::isfinite(temperature) || temperature <= 0.0)
    throw std::invalid_argument("thermal_calibration: temperature must be positive and finite");
  if (!std::isfinite(gamma) || gamma <= 0.0)
    throw std::invalid_argument("thermal_calibration: gamma must be positive and finite");
  double coth_u = 1.0 / std::tanh(0.5 / temperature);
  ThermalCalibration cal;
  cal.mode = mode;
  cal.params.omega = 1.0;
  cal.params.gamma = gamma;
  cal.params.h13r = 0.0;
  if (mode == EquationMode::AsPrinted) {
    cal.params.h11 = cal.params.h33 = 0.5 * gamma * coth_u;
    cal.note =
        "as-printed convention: h11 = h33 = (gamma/2) coth(1/(2T)); matches the "
        "published closed-form stationary dispersions, not a fixed point of the "
        "printed drift";
  } else {
    cal.params.h11 = cal.params.h33 = gamma * coth_u;
    cal.note =
        "rederived convention: h11 = h33 = gamma coth(1/(2T)); the thermal state "
        "is an exact fixed point of the rederived drift";
  }
  return cal;
}

namespace {

// Recognizes couplings of thermal shape for the given mode and returns the
// implied coth(1/(2T)).
std::optional<double> implied_coth(const LindbladParams& p, EquationMode mode) {
  if (p.h13r != 0.0 || p.h11 != p.h33 || p.h11 <= 0.0) return std::nullopt;
  double coth_u = (mode == EquationMode::AsPrinted ? 2.0 : 1.0) * p.h11 / p.gamma;
  if (coth_u < 1.0) return std::nullopt;
  return coth_u;
}

ModeAudit audit_mode(const LindbladParams& p, EquationMode mode, const Vec3& formula) {
  MomentSystem sys = moment_system(p, mode);
  ModeAudit a;
  a.mode = mode;
  a.dispersion_eigenvalues = eigenvalues(split_uniform_damping(sys.drift));
  a.mean_eigenvalues = eigenvalues_rotational(sys.mean_drift);
  a.fixed_point = stationary_solve(sys);
  a.formula_residual = add(mul(sys.drift, formula), sys.drive);
  if (auto coth_u = implied_coth(p, mode)) {
    Vec3 xth = {0.5 * *coth_u, 0.0, 0.5 * *coth_u};
    a.thermal_residual = inf_norm(add(mul(sys.drift, xth), sys.drive));
    a.implied_temperature = 0.5 / std::atanh(1.0 / *coth_u);  // +0 when coth = 1
  }
  return a;
}

}  // namespace

AuditReport audit(const LindbladParams& p) {
  require_valid_params(p);
  if (!(p.gamma > 0.0)) throw std::invalid_argument("audit: requires gamma > 0");
  AuditReport rep;
  rep.formula_stationary = stationary_formula(p);
  rep.as_printed = audit_mode(p, EquationMode::AsPrinted, rep.formula_stationary);
  rep.rederived = audit_mode(p, EquationMode::Rederived, rep.formula_stationary);
  rep.fixed_point_gap = inf_norm(sub(rep.as_printed.fixed_point, rep.rederived.fixed_point));
  rep.coupling_lhs = p.h11 * p.h33;
  rep.coupling_rhs = p.h13r * p.h13r + p.gamma * p.gamma;
  rep.coupling_ok = rep.coupling_lhs >= rep.coupling_rhs;
  return rep;
}

}  // namespace lindosc
