#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lindosc/gaussian_state.hpp"
#include "lindosc/length_scales.hpp"
#include "lindosc/linalg.hpp"

// Moment dynamics of the damped oscillator under Gaussian (quadratic) noise.
// The dispersion vector x = (a, b, c) = (var_p, -cov_rp, var_r) obeys the
// linear system dx/dtau = drift x + drive, and the means rotate and decay
// under a 2x2 drift of their own.
//
// Two published forms of the dispersion system are in circulation and they
// disagree; both are implemented side by side and never mixed:
//
//   * AsPrinted  -- the coefficient equations exactly as published;
//   * Rederived  -- the system obtained by re-deriving the coefficient
//                   equations from the underlying transport equation.
//
// The audit() report quantifies how far apart the two are for given
// parameters, including against the published closed-form stationary state.

namespace lindosc {

enum class EquationMode { AsPrinted, Rederived };

const char* to_string(EquationMode mode);

struct LindbladParams {
  double omega = 1.0;  // oscillator frequency (units of the reference frequency)
  double gamma = 0.0;  // relaxation rate
  double h11 = 0.0;    // noise strength in r^2
  double h33 = 0.0;    // noise strength in Q^2
  double h13r = 0.0;   // cross noise, real part
};

// omega > 0, gamma >= 0, h11 >= 0, h33 >= 0, everything finite; h13r is
// unconstrained in sign. Throws std::invalid_argument.
void require_valid_params(const LindbladParams& p);

struct MomentSystem {
  Mat3 drift;
  Vec3 drive;
  Mat2 mean_drift;
  EquationMode mode = EquationMode::Rederived;
  LindbladParams params;
};

MomentSystem moment_system(const LindbladParams& p, EquationMode mode);

// Initial Gaussian state: dispersions a1 = var_p(0), b1 = var_r(0), no cross
// covariance, plus mean position / momentum. a1 * b1 = 1/4 is the minimum
// uncertainty family.
struct InitialConditions {
  double a1 = 0.5;
  double b1 = 0.5;
  double mean_r = 0.0;
  double mean_p = 0.0;
};

GaussianMoments initial_state(const InitialConditions& ic);

// Published closed-form stationary dispersions (A, B, C) in terms of the
// coupling constants; requires gamma > 0. Note these need not solve either
// moment system exactly -- that gap is part of what audit() measures.
Vec3 stationary_formula(const LindbladParams& p);

// Fixed point of the given system: solves drift x = -drive. Requires
// gamma > 0 (otherwise the drift is singular / purely oscillatory).
Vec3 stationary_solve(const MomentSystem& sys);

// Uncertainty slack allowed along trajectories before a point is flagged
// unphysical; looser than the state-validation slack to absorb propagation
// rounding right at the pure-state boundary.
inline constexpr double kTrajectorySlack = 1e-9;

struct Trajectory {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<double> times;
  std::vector<GaussianMoments> states;
  std::vector<LengthScales> lengths;  // unchecked evaluation; inf/NaN preserved
  bool physical = true;
  std::size_t first_unphysical = npos;
};

// Closed-form propagation at the requested times (non-empty, finite, first
// >= 0, strictly increasing). Uses the exponential of the drift family
// directly, so accuracy is independent of the output spacing.
Trajectory propagate(const MomentSystem& sys, const InitialConditions& ic,
                     std::span<const double> times);

// Fixed-step classical Runge-Kutta integration of the same system, used to
// cross-check the closed form. dt must satisfy
// dt <= 0.1 / max(1, gamma, omega^2).
Trajectory propagate_numeric(const MomentSystem& sys, const InitialConditions& ic,
                             double t_end, double dt);

// Raw integrator on the joint vector y = (a, b, c, mean_r, mean_p); returns
// steps + 1 rows including the initial one. Exposed for convergence and
// linearity tests.
std::vector<std::array<double, 5>> integrate_moments_rk4(const MomentSystem& sys,
                                                         const std::array<double, 5>& y0,
                                                         long steps, double dt);

// Noise couplings that make the thermal state at the given temperature
// stationary under the chosen mode: h11 = h33 proportional to coth(1/(2T)),
// h13r = 0. The proportionality constant differs between modes; the note
// says which convention produced it.
struct ThermalCalibration {
  LindbladParams params;
  EquationMode mode = EquationMode::Rederived;
  std::string note;
};

ThermalCalibration thermal_calibration(double temperature, double gamma, EquationMode mode);

struct ModeAudit {
  EquationMode mode = EquationMode::Rederived;
  std::array<std::complex<double>, 3> dispersion_eigenvalues{};
  std::array<std::complex<double>, 2> mean_eigenvalues{};
  Vec3 fixed_point{};
  Vec3 formula_residual{};  // drift * formula + drive
  // Present when the couplings have thermal shape for this mode (h13r = 0,
  // h11 = h33, implied coth >= 1): distance of the implied thermal state
  // from being a fixed point, plus the temperature the couplings encode.
  std::optional<double> thermal_residual;
  std::optional<double> implied_temperature;
};

struct AuditReport {
  ModeAudit as_printed;
  ModeAudit rederived;
  Vec3 formula_stationary{};
  double fixed_point_gap = 0.0;         // inf-norm between the two fixed points
  double coupling_lhs = 0.0;            // h11 * h33
  double coupling_rhs = 0.0;            // h13r^2 + gamma^2
  bool coupling_ok = true;              // positivity inequality lhs >= rhs
};

// Requires gamma > 0. Never throws on inconsistency between the modes; the
// inconsistencies are the payload.
AuditReport audit(const LindbladParams& p);

}  // namespace lindosc
