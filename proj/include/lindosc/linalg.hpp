#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

// Minimal fixed-size linear algebra for the 3x3 dispersion drift and the
// 2x2 mean drift. All drift matrices in this project share one structure:
// a common diagonal entry mu plus a deviatoric part N whose spectrum is
// {0, +-i c}. The matrix exponential is closed-form for that family.

namespace lindosc {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

struct Mat2 {
  std::array<double, 4> a{};  // row-major
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }
};

struct Mat3 {
  std::array<double, 9> a{};  // row-major
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

  static Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }
};

inline Vec3 mul(const Mat3& m, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    r[static_cast<std::size_t>(i)] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return r;
}

inline Mat3 mul(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
  return r;
}

inline Vec2 mul(const Mat2& m, const Vec2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

inline Vec3 add(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
inline Vec3 sub(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
inline Vec3 scale(double s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }

inline Mat3 add(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

inline Mat3 scale(double s, const Mat3& x) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = s * x.a[k];
  return r;
}

inline double inf_norm(const Vec3& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

inline double inf_norm(const Mat3& m) {
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    double row = std::abs(m(i, 0)) + std::abs(m(i, 1)) + std::abs(m(i, 2));
    best = std::max(best, row);
  }
  return best;
}

inline double det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Sum of the principal 2x2 minors (second elementary symmetric function of
// the eigenvalues).
inline double principal_minor_sum(const Mat3& m) {
  return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
         (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
}

// Solves m x = rhs by Gaussian elimination with partial pivoting.
Vec3 solve3(const Mat3& m, const Vec3& rhs);

// sin(t)/t, (1-cos t)/t^2, (t-sin t)/t^3 with series fallbacks near zero.
inline double sinc1(double t) {
  double t2 = t * t;
  if (std::abs(t) < 1e-4) return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
  return std::sin(t) / t;
}

inline double sinc2(double t) {
  double t2 = t * t;
  if (std::abs(t) < 1e-4) return 0.5 - t2 / 24.0 * (1.0 - t2 / 30.0);
  return (1.0 - std::cos(t)) / t2;
}

inline double sinc3(double t) {
  double t2 = t * t;
  if (std::abs(t) < 1e-4) return 1.0 / 6.0 - t2 / 120.0 * (1.0 - t2 / 42.0);
  return (t - std::sin(t)) / (t2 * t);
}

// Decomposition m = mu*I + N with N having spectrum {0, +-i freq}.
struct UniformDampingSplit {
  double mu = 0.0;
  double freq = 0.0;
  Mat3 dev;  // N
};

// Throws std::runtime_error when m is not of the supported form (unequal
// diagonal, or deviatoric part without a pure oscillatory spectrum).
UniformDampingSplit split_uniform_damping(const Mat3& m);

// exp(tau * (mu I + N)) = e^{mu tau} (I + tau sinc1(c tau) N + tau^2 sinc2(c tau) N^2).
Mat3 expm(const UniformDampingSplit& s, double tau);

// Integral of exp(s N) ds over [0, tau]; only meaningful for mu == 0 and is
// the particular-solution kernel of the undamped system.
Mat3 expm_integral_undamped(const UniformDampingSplit& s, double tau);

inline std::array<std::complex<double>, 3> eigenvalues(const UniformDampingSplit& s) {
  return {std::complex<double>(s.mu, 0.0), std::complex<double>(s.mu, s.freq),
          std::complex<double>(s.mu, -s.freq)};
}

// exp(tau F) for a 2x2 matrix whose trace-free part is a rotation generator
// (det of the trace-free part positive, i.e. a complex eigenvalue pair).
Mat2 expm_rotational(const Mat2& f, double tau);

std::array<std::complex<double>, 2> eigenvalues_rotational(const Mat2& f);

}  // namespace lindosc
