#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "lindosc/oracle.hpp"

using namespace lindosc;

namespace {

std::vector<std::array<double, 2>> probe_points() {
  return {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}, {-0.7, 0.3},
          {1.0, 1.0}, {0.2, -1.1}, {-0.4, -0.4}};
}

struct StateGen {
  std::mt19937_64 rng{912873};
  double uniform(double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  GaussianMoments mixed_state() {
    GaussianMoments m;
    m.var_r = uniform(0.3, 2.5);
    m.var_p = uniform(0.26 / m.var_r, 2.0 + 0.26 / m.var_r);
    double headroom = std::sqrt(m.var_r * m.var_p - 0.2501);
    m.cov_rp = uniform(-headroom, headroom);
    m.mean_r = uniform(-1.5, 1.5);
    m.mean_p = uniform(-1.5, 1.5);
    return m;
  }
};

}  // namespace

TEST_CASE("characteristics at t = 0 reproduce the initial characteristic function") {
  LindbladParams p{1.0, 0.5, 4.0, 8.0, 4.0};
  InitialConditions ic{0.8, 0.4, 0.6, -0.2};
  GaussianMoments m0 = initial_state(ic);
  auto vals = characteristics_ambiguity(p, ic, 0.0, probe_points());
  REQUIRE(vals.size() == probe_points().size());
  for (const auto& cp : vals) {
    std::complex<double> want = ambiguity_at(m0, cp.big_q, cp.r);
    CHECK(std::abs(cp.value - want) < 1e-15);
  }
}

TEST_CASE("transport solution tracks the rederived moment flow pointwise") {
  LindbladParams p{1.0, 0.5, 4.0, 8.0, 4.0};
  InitialConditions ic{0.8, 0.4, 0.6, -0.2};
  MomentSystem sys = moment_system(p, EquationMode::Rederived);
  for (double t : {0.3, 1.0}) {
    Trajectory traj = propagate(sys, ic, std::vector<double>{t});
    auto vals = characteristics_ambiguity(p, ic, t, probe_points());
    double worst = 0.0;
    for (const auto& cp : vals) {
      std::complex<double> want = ambiguity_at(traj.states[0], cp.big_q, cp.r);
      worst = std::max(worst, std::abs(cp.value - want));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("transport solution rejects bad inputs") {
  LindbladParams p{1.0, 0.5, 1.0, 1.0, 0.0};
  InitialConditions ic{};
  auto pts = probe_points();
  CHECK_THROWS_AS(characteristics_ambiguity(p, ic, -1.0, pts), std::invalid_argument);
  CHECK_THROWS_AS(characteristics_ambiguity(p, ic, std::nan(""), pts), std::invalid_argument);
  CHECK_THROWS_AS(characteristics_ambiguity(p, ic, 1.0, pts, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(characteristics_ambiguity(p, ic, 1.0, pts, 2e-3), std::invalid_argument);
  LindbladParams bad = p;
  bad.omega = -1.0;
  CHECK_THROWS_AS(characteristics_ambiguity(bad, ic, 1.0, pts), std::invalid_argument);
  CHECK_THROWS_AS(characteristics_ambiguity(p, InitialConditions{0.1, 0.1, 0.0, 0.0}, 1.0, pts),
                  std::invalid_argument);
}

TEST_CASE("grid validation") {
  CHECK_NOTHROW(require_valid_grid(GridSpec{}));
  CHECK_THROWS_AS(require_valid_grid(GridSpec{3.9, 2048}), std::invalid_argument);
  CHECK_THROWS_AS(require_valid_grid(GridSpec{8.0, 127}), std::invalid_argument);
  CHECK_THROWS_AS(require_valid_grid(GridSpec{8.0, 129}), std::invalid_argument);  // odd
  GridSpec inf_grid;
  inf_grid.half_width = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(require_valid_grid(inf_grid), std::invalid_argument);
}

TEST_CASE("phase-space quadrature recovers moments on the default grid") {
  GaussianMoments sheared{1.3, -0.4, 0.6, 0.2, -0.5};
  QuadratureMoments q = quadrature_moments(sheared, GridSpec{});
  CHECK(std::abs(q.norm - 1.0) < 1e-10);
  CHECK(q.max_residual < 1e-10);

  // Truncation is negligible for the ground state; what remains is the
  // accumulation rounding floor of ~4M trapezoid terms.
  QuadratureMoments qg = quadrature_moments(ground_state(), GridSpec{});
  CHECK(std::abs(qg.norm - 1.0) < 5e-11);
  CHECK(qg.max_residual < 5e-11);
}

TEST_CASE("a box of four standard deviations is detected as too small") {
  // Gaussian tail mass beyond 4 sigma is ~1.3e-4 per axis, which trips the
  // 1e-4 normalization gate deterministically.
  CHECK_THROWS_AS(quadrature_moments(ground_state(), GridSpec{4.0, 2048}),
                  std::runtime_error);
  CHECK_THROWS_AS(quadrature_purity_norm(ground_state(), GridSpec{4.0, 2048}),
                  std::runtime_error);
}

TEST_CASE("density quadrature recovers trace and purity") {
  PurityNorm pn = quadrature_purity_norm(ground_state(), GridSpec{});
  CHECK(std::abs(pn.norm - 1.0) < 1e-10);
  CHECK(std::abs(pn.purity - 1.0) < 1e-10);

  PurityNorm th = quadrature_purity_norm(thermal_state(1.0), GridSpec{});
  CHECK(std::abs(th.norm - 1.0) < 1e-10);
  CHECK(th.purity == doctest::Approx(0.46211715726000976).epsilon(1e-10));
}

TEST_CASE("both quadratures close against the algebraic values on random states") {
  StateGen gen;
  GridSpec grid{8.0, 1024};
  for (int k = 0; k < 8; ++k) {
    GaussianMoments m = gen.mixed_state();
    QuadratureMoments q = quadrature_moments(m, grid);
    CHECK(q.max_residual < 1e-8);
    PurityNorm pn = quadrature_purity_norm(m, grid);
    CHECK(std::abs(pn.norm - 1.0) < 1e-8);
    CHECK(std::abs(pn.purity - purity(m)) < 1e-6);
  }
}

TEST_CASE("quadratures refuse unphysical states") {
  GaussianMoments squeezed{0.3, 0.0, 0.3, 0.0, 0.0};
  CHECK_THROWS_AS(quadrature_moments(squeezed, GridSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(quadrature_purity_norm(squeezed, GridSpec{}), std::invalid_argument);
}
