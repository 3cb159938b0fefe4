#include "lindosc/linalg.hpp"

#include <algorithm>
#include <cstddef>

namespace lindosc {

Vec3 solve3(const Mat3& m, const Vec3& rhs) {
  double aug[3][4];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) aug[i][j] = m(i, j);
    aug[i][3] = rhs[static_cast<std::size_t>(i)];
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int i = col + 1; i < 3; ++i)
      if (std::abs(aug[i][col]) > std::abs(aug[pivot][col])) pivot = i;
    if (std::abs(aug[pivot][col]) < 1e-300)
      throw std::runtime_error("solve3: singular coefficient matrix");
    if (pivot != col)
      for (int j = 0; j < 4; ++j) std::swap(aug[pivot][j], aug[col][j]);
    for (int i = col + 1; i < 3; ++i) {
      double f = aug[i][col] / aug[col][col];
      for (int j = col; j < 4; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  Vec3 x{};
  for (int i = 2; i >= 0; --i) {
    double s = aug[i][3];
    for (int j = i + 1; j < 3; ++j) s -= aug[i][j] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / aug[i][i];
  }
  return x;
}

UniformDampingSplit split_uniform_damping(const Mat3& m) {
  double scale_m = std::max(1.0, inf_norm(m));
  if (std::abs(m(0, 0) - m(1, 1)) > 1e-9 * scale_m ||
      std::abs(m(0, 0) - m(2, 2)) > 1e-9 * scale_m)
    throw std::runtime_error("split_uniform_damping: diagonal entries differ");

  UniformDampingSplit s;
  s.mu = m(0, 0);
  s.dev = m;
  s.dev(0, 0) = s.dev(1, 1) = s.dev(2, 2) = 0.0;

  double nn = std::max(1.0, inf_norm(s.dev));
  double n3 = nn * nn * nn;
  if (std::abs(det(s.dev)) > 1e-9 * n3)
    throw std::runtime_error("split_uniform_damping: deviatoric part has nonzero determinant");
  double p = principal_minor_sum(s.dev);
  if (!(p > 0.0))
    throw std::runtime_error("split_uniform_damping: deviatoric spectrum is not oscillatory");

  // Cayley-Hamilton for the family: N^3 = -p N.
  Mat3 n2 = mul(s.dev, s.dev);
  Mat3 resid = add(mul(n2, s.dev), scale(p, s.dev));
  if (inf_norm(resid) > 1e-9 * n3)
    throw std::runtime_error("split_uniform_damping: deviatoric part fails N^3 = -p N");

  s.freq = std::sqrt(p);
  return s;
}

Mat3 expm(const UniformDampingSplit& s, double tau) {
  double theta = s.freq * tau;
  Mat3 n2 = mul(s.dev, s.dev);
  Mat3 core = add(Mat3::identity(),
                  add(scale(tau * sinc1(theta), s.dev), scale(tau * tau * sinc2(theta), n2)));
  return scale(std::exp(s.mu * tau), core);
}

Mat3 expm_integral_undamped(const UniformDampingSplit& s, double tau) {
  if (std::abs(s.mu) > 1e-12)
    throw std::runtime_error("expm_integral_undamped: nonzero damping");
  double theta = s.freq * tau;
  Mat3 n2 = mul(s.dev, s.dev);
  Mat3 r = scale(tau, Mat3::identity());
  r = add(r, scale(tau * tau * sinc2(theta), s.dev));
  r = add(r, scale(tau * tau * tau * sinc3(theta), n2));
  return r;
}

Mat2 expm_rotational(const Mat2& f, double tau) {
  double mu = 0.5 * (f(0, 0) + f(1, 1));
  Mat2 d = f;
  d(0, 0) -= mu;
  d(1, 1) -= mu;
  double dd = d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0);  // det of trace-free part
  if (!(dd > 0.0))
    throw std::runtime_error("expm_rotational: trace-free part is not a rotation generator");
  double c = std::sqrt(dd);
  double theta = c * tau;
  double e = std::exp(mu * tau);
  double cs = std::cos(theta);
  double sn = tau * sinc1(theta);  // sin(c tau)/c
  Mat2 r;
  r(0, 0) = e * (cs + sn * d(0, 0));
  r(0, 1) = e * sn * d(0, 1);
  r(1, 0) = e * sn * d(1, 0);
  r(1, 1) = e * (cs + sn * d(1, 1));
  return r;
}

std::array<std::complex<double>, 2> eigenvalues_rotational(const Mat2& f) {
  double mu = 0.5 * (f(0, 0) + f(1, 1));
  double dd = (f(0, 0) - mu) * (f(1, 1) - mu) - f(0, 1) * f(1, 0);
  if (!(dd > 0.0))
    throw std::runtime_error("eigenvalues_rotational: trace-free part is not a rotation generator");
  double c = std::sqrt(dd);
  return {std::complex<double>(mu, c), std::complex<double>(mu, -c)};
}

}  // namespace lindosc
