#pragma once

#include <array>
#include <complex>
#include <vector>

#include "lindosc/dynamics.hpp"
#include "lindosc/gaussian_state.hpp"

// Independent cross-checks that avoid the moment-system machinery:
//
//   * characteristics_ambiguity integrates the underlying first-order
//     transport equation for the characteristic function pointwise, by
//     tracing each phase-space point back along its characteristic curve
//     and accumulating the source term. Only the transport coefficients are
//     used -- none of the closed-form propagation.
//
//   * the quadrature routines integrate the pointwise evaluators on a
//     truncated grid and recover normalization, moments and purity, checking
//     the algebraic values from the other direction.

namespace lindosc {

struct GridSpec {
  double half_width = 8.0;   // box half-width in standard deviations (>= 4)
  int points_per_axis = 2048;  // even, >= 128
};

void require_valid_grid(const GridSpec& g);  // throws std::invalid_argument

struct CharacteristicPoint {
  double big_q = 0.0;
  double r = 0.0;
  std::complex<double> value;
};

// Transport-equation solution of the characteristic function at time t for
// the given phase-space points. The transport coefficients correspond to the
// rederived convention of the moment system. dt is the upper bound on the
// internal step (the actual step divides t evenly); must be in (0, 1e-3].
std::vector<CharacteristicPoint> characteristics_ambiguity(
    const LindbladParams& p, const InitialConditions& ic, double t,
    const std::vector<std::array<double, 2>>& points, double dt = 1e-3);

struct QuadratureMoments {
  double norm = 0.0;
  GaussianMoments recovered;
  double max_residual = 0.0;  // largest |recovered - stored| over the five moments
};

// Trapezoid integration of the Wigner evaluator over mean +- half_width
// sigma per axis. Throws std::runtime_error when |norm - 1| > 1e-4 (grid too
// coarse or box too small to trust the recovered moments).
QuadratureMoments quadrature_moments(const GaussianMoments& m, const GridSpec& g);

struct PurityNorm {
  double norm = 0.0;    // integral of the density diagonal
  double purity = 0.0;  // double integral of |rho|^2
};

// Same quantities from the position-representation evaluator. Both integrals
// are recomputed on a box widened by two standard deviations; if either
// moves by more than 1e-6 the truncation is not converged and a
// std::runtime_error is thrown.
PurityNorm quadrature_purity_norm(const GaussianMoments& m, const GridSpec& g);

}  // namespace lindosc
