#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "lindosc/gaussian_state.hpp"

using namespace lindosc;

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

TEST_CASE("ground state defaults and exact invariants") {
  GaussianMoments g = ground_state();
  CHECK(g.var_p == 0.5);
  CHECK(g.var_r == 0.5);
  CHECK(g.cov_rp == 0.0);
  CHECK(g.mean_r == 0.0);
  CHECK(g.mean_p == 0.0);
  CHECK(uncertainty_product(g) == 0.25);
  CHECK(effective_uncertainty(g) == 0.25);
  CHECK(purity(g) == 1.0);
  CHECK(validate_state(g).is_valid);
  CHECK(validate_state(g).violations.empty());
}

TEST_CASE("characteristic function pointwise values") {
  GaussianMoments g = ground_state();
  // chi(0,0) = 1 exactly for any normalized state.
  CHECK(ambiguity_at(g, 0.0, 0.0) == std::complex<double>(1.0, 0.0));

  // Ground state at Q = r = 1: exp(-(r^2 + Q^2)/4) = exp(-1/2).
  std::complex<double> v = ambiguity_at(g, 1.0, 1.0);
  CHECK(v.real() == doctest::Approx(0.60653065971263342).epsilon(1e-14));
  CHECK(v.imag() == 0.0);

  // Means only contribute a phase exp(i (Q <R> - r <p>)).
  GaussianMoments shifted = g;
  shifted.mean_r = 0.7;
  shifted.mean_p = -0.3;
  double big_q = 1.2, r = 0.8;
  std::complex<double> phase = std::exp(std::complex<double>(0.0, big_q * 0.7 - r * (-0.3)));
  std::complex<double> want = ambiguity_at(g, big_q, r) * phase;
  std::complex<double> got = ambiguity_at(shifted, big_q, r);
  CHECK(std::abs(got - want) < 1e-15);

  // Cross covariance enters through the 2 cov r Q term in the exponent.
  GaussianMoments sheared{1.0, 0.3, 0.5, 0.0, 0.0};
  double expect = std::exp(-0.5 * (1.0 * r * r + 2.0 * 0.3 * r * big_q + 0.5 * big_q * big_q));
  CHECK(ambiguity_at(sheared, big_q, r).real() == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("Wigner evaluator pointwise values") {
  GaussianMoments g = ground_state();
  // Peak height 1/sqrt(w) = 2 for the ground state.
  CHECK(wigner_at(g, 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(wigner_at(g, 1.0, 0.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(wigner_at(g, 0.0, -1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));

  // Gaussian Wigner functions are strictly positive everywhere, shear or not.
  GaussianMoments sheared{1.3, -0.4, 0.6, 0.2, -0.5};
  for (double big_r : {-2.0, 0.0, 1.7})
    for (double p : {-1.1, 0.4, 3.0}) CHECK(wigner_at(sheared, big_r, p) > 0.0);

  // The peak sits at the means and carries height 1/sqrt(w).
  double w = uncertainty_product(sheared);
  CHECK(wigner_at(sheared, 0.2, -0.5) == doctest::Approx(1.0 / std::sqrt(w)).epsilon(1e-14));
}

TEST_CASE("density matrix pointwise values and hermiticity") {
  GaussianMoments g = ground_state();
  // rho(0,0) = 1/sqrt(pi) for the ground state.
  std::complex<double> d0 = density_at(g, 0.0, 0.0);
  CHECK(d0.real() == doctest::Approx(0.56418958354775629).epsilon(1e-14));
  CHECK(d0.imag() == 0.0);

  // Diagonal is the position distribution: (1/sqrt(pi)) exp(-r^2).
  double r = 0.35;
  CHECK(density_at(g, r, r).real() ==
        doctest::Approx(0.56418958354775629 * std::exp(-r * r)).epsilon(1e-13));

  // Hermiticity rho(r1,r2) = conj(rho(r2,r1)) for a fully general state.
  GaussianMoments m{0.9, 0.25, 0.7, 0.4, -0.6};
  for (double r1 : {-0.8, 0.3, 1.4}) {
    for (double r2 : {-1.1, 0.0, 0.9}) {
      std::complex<double> a = density_at(m, r1, r2);
      std::complex<double> b = std::conj(density_at(m, r2, r1));
      CHECK(std::abs(a - b) < 1e-15);
    }
  }
  // The diagonal stays exactly real even with shear and drift.
  CHECK(density_at(m, 0.27, 0.27).imag() == 0.0);
}

TEST_CASE("thermal state moments and purity") {
  GaussianMoments t1 = thermal_state(1.0);
  CHECK(t1.var_r == doctest::Approx(1.0819767068693264).epsilon(1e-15));
  CHECK(t1.var_p == t1.var_r);
  CHECK(t1.cov_rp == 0.0);
  CHECK(purity(t1) == doctest::Approx(0.46211715726000976).epsilon(1e-14));  // tanh(1/2)

  GaussianMoments t5 = thermal_state(5.0);
  CHECK(t5.var_r == doctest::Approx(5.0166555661269948).epsilon(1e-15));

  // Low temperature limit approaches the ground state.
  GaussianMoments cold = thermal_state(0.01);
  CHECK(cold.var_r == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(purity(cold) == doctest::Approx(1.0).epsilon(1e-12));

  // High temperature behaves classically: var ~ T.
  GaussianMoments hot = thermal_state(100.0);
  CHECK(hot.var_r == doctest::Approx(100.0).epsilon(1e-4));

  CHECK_THROWS_AS(thermal_state(0.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_state(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_state(kNan), std::invalid_argument);
}

TEST_CASE("closed-form thermal matrix element matches the general evaluator") {
  for (double temperature : {0.2, 1.0, 5.0}) {
    GaussianMoments m = thermal_state(temperature);
    for (double r1 : {-1.3, 0.0, 0.8}) {
      for (double r2 : {-0.4, 0.6, 2.1}) {
        std::complex<double> closed = thermal_density_at(temperature, r1, r2);
        std::complex<double> general = density_at(m, r1, r2);
        CHECK(std::abs(closed - general) <= 1e-12 * std::abs(general));
        CHECK(closed.imag() == 0.0);  // thermal states carry no shear or drift
      }
    }
  }
  CHECK_THROWS_AS(thermal_density_at(0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_density_at(-2.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("validation report carries labels and raw measurements") {
  // Non-finite moments short-circuit everything else.
  GaussianMoments bad = ground_state();
  bad.mean_p = kNan;
  ValidityReport rep = validate_state(bad);
  CHECK_FALSE(rep.is_valid);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].label == "finite_moments");
  CHECK(std::isnan(rep.omega_sq));

  // Negative dispersions are reported individually.
  GaussianMoments neg{-1.0, 0.0, -2.0, 0.0, 0.0};
  rep = validate_state(neg);
  CHECK_FALSE(rep.is_valid);
  REQUIRE(rep.violations.size() == 2);
  CHECK(rep.violations[0].label == "momentum_dispersion_positive");
  CHECK(rep.violations[0].measured == -1.0);
  CHECK(rep.violations[1].label == "position_dispersion_positive");
  CHECK(rep.violations[1].measured == -2.0);

  // Uncertainty violation reports the raw product, not a clamped value.
  GaussianMoments squeezed{0.3, 0.0, 0.3, 0.0, 0.0};
  rep = validate_state(squeezed);
  CHECK_FALSE(rep.is_valid);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].label == "uncertainty_product_bound");
  CHECK(rep.violations[0].measured == doctest::Approx(0.09).epsilon(1e-15));
  CHECK(rep.violations[0].bound == 0.25);
  CHECK(rep.omega_sq == doctest::Approx(0.09).epsilon(1e-15));

  CHECK_THROWS_AS(require_valid_state(squeezed), std::invalid_argument);
}

TEST_CASE("pure-state clamp window behaves one-sided") {
  // A few ulp below 1/4 (inside the tolerance window): valid, clamped to
  // exactly 1/4, purity exactly one.
  GaussianMoments near_pure{0.5 - 1e-13, 0.0, 0.5, 0.0, 0.0};
  double w = uncertainty_product(near_pure);
  CHECK(w < 0.25);
  CHECK(w > 0.25 - kUncertaintyTol);
  CHECK(validate_state(near_pure).is_valid);
  CHECK(effective_uncertainty(near_pure) == 0.25);
  CHECK(purity(near_pure) == 1.0);

  // Below the window: invalid, and the clamp refuses to rescue it.
  GaussianMoments below{0.5 - 1e-11, 0.0, 0.5, 0.0, 0.0};
  CHECK_FALSE(validate_state(below).is_valid);
  CHECK_THROWS_AS(effective_uncertainty(below), std::invalid_argument);
  CHECK_THROWS_AS(purity(below), std::invalid_argument);

  // Above 1/4 nothing is clamped.
  GaussianMoments mixed{1.0, 0.0, 1.0, 0.0, 0.0};
  CHECK(effective_uncertainty(mixed) == 1.0);
  CHECK(purity(mixed) == 0.5);
}

TEST_CASE("checked evaluators refuse unphysical states, unchecked ones do not") {
  GaussianMoments squeezed{0.3, 0.0, 0.3, 0.0, 0.0};
  CHECK_THROWS_AS(ambiguity_at(squeezed, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(wigner_at(squeezed, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(density_at(squeezed, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(purity(squeezed), std::invalid_argument);

  // The unchecked variants evaluate the same formulas without gating; used
  // by the quadrature loops where validity was established once up front.
  CHECK(std::isfinite(detail::wigner_unchecked(squeezed, 0.1, 0.1)));
  CHECK(std::isfinite(std::abs(detail::ambiguity_unchecked(squeezed, 0.1, 0.1))));
  CHECK(std::isfinite(std::abs(detail::density_unchecked(squeezed, 0.1, 0.1))));

  GaussianMoments g = ground_state();
  CHECK(detail::wigner_unchecked(g, 0.4, -0.2) == wigner_at(g, 0.4, -0.2));
}
