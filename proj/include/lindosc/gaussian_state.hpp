#pragma once

#include <complex>
#include <string>
#include <vector>

// Gaussian states of a single oscillator degree of freedom, in dimensionless
// units (hbar = m = 1, frequencies measured against the oscillator frequency).
//
// A Gaussian state is fixed by five real numbers: the two means and the three
// second central moments. Three equivalent representations are exposed as
// pointwise evaluators:
//
//   * ambiguity_at  -- the characteristic function chi(Q, r) of the state,
//                      i.e. the double Fourier transform of the density matrix
//                      in center-of-mass / relative coordinates;
//   * wigner_at     -- the Wigner quasi-probability density W(R, p);
//   * density_at    -- the position-representation matrix element rho(r1, r2).
//
// Conventions: chi(Q, r) = exp(i(Q<R> - r<p>) - (var_p r^2 + 2 cov_rp r Q
// + var_r Q^2)/2). W is normalized so that integral W(R, p) dR dp / (2 pi) = 1,
// and rho has unit trace. The evaluators are kept consistent with each other;
// the cross-checks live in the validation suite and the test suites.

namespace lindosc {

// Second moments and means. var_r and var_p are the position and momentum
// dispersions (variances); cov_rp is the symmetrized cross covariance
// <{R - <R>, p - <p>}/2>. Defaults give the ground state.
struct GaussianMoments {
  double var_p = 0.5;
  double cov_rp = 0.0;
  double var_r = 0.5;
  double mean_r = 0.0;
  double mean_p = 0.0;
};

inline GaussianMoments ground_state() { return GaussianMoments{}; }

// Schroedinger-Robertson invariant var_r * var_p - cov_rp^2. Physical states
// have it >= 1/4; pure states sit exactly at 1/4.
inline double uncertainty_product(const GaussianMoments& m) {
  return m.var_r * m.var_p - m.cov_rp * m.cov_rp;
}

inline constexpr double kUncertaintyBound = 0.25;

// Slack allowed below the bound before a state is declared unphysical, and
// the width of the clamp window used when evaluating purity at the bound.
inline constexpr double kUncertaintyTol = 1e-12;

struct ConstraintViolation {
  std::string label;
  double measured = 0.0;
  double bound = 0.0;
};

struct ValidityReport {
  bool is_valid = true;
  double omega_sq = 0.0;  // raw uncertainty product, reported unclamped
  std::vector<ConstraintViolation> violations;
};

// Non-throwing structural check: finiteness, positive dispersions, and the
// uncertainty bound (with kUncertaintyTol slack).
ValidityReport validate_state(const GaussianMoments& m);

// Throws std::invalid_argument with the collected violation labels.
void require_valid_state(const GaussianMoments& m);

// Uncertainty product with values within kUncertaintyTol below 1/4 clamped
// up to exactly 1/4, so that pure states evaluated through rounding noise do
// not produce purities above one. Assumes the state passed validation.
double effective_uncertainty(const GaussianMoments& m);

std::complex<double> ambiguity_at(const GaussianMoments& m, double big_q, double r);
double wigner_at(const GaussianMoments& m, double big_r, double p);
std::complex<double> density_at(const GaussianMoments& m, double r1, double r2);

// tr rho^2 = 1 / (2 sqrt(uncertainty product)).
double purity(const GaussianMoments& m);

// Thermal equilibrium moments at temperature T (in units of the oscillator
// quantum): var_r = var_p = coth(1/(2T))/2, no cross covariance.
GaussianMoments thermal_state(double temperature);

// Closed-form thermal matrix element; equals density_at(thermal_state(T))
// up to rounding. Normalized so the diagonal integrates to one.
std::complex<double> thermal_density_at(double temperature, double r1, double r2);

namespace detail {
// Evaluators without the per-call validity check; used by quadrature loops.
std::complex<double> ambiguity_unchecked(const GaussianMoments& m, double big_q, double r);
double wigner_unchecked(const GaussianMoments& m, double big_r, double p);
std::complex<double> density_unchecked(const GaussianMoments& m, double r1, double r2);
}  // namespace detail

}  // namespace lindosc
