#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace rho_test {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Seeded generator kept separate from the library sampler so tests never share its code path.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(0x9E3779B97F4A7C15ULL ^ (seed * 0xBF58476D1CE4E5B9ULL)) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  cplx gaussian() { return {normal(), normal()}; }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  cplx in_disk(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, uniform(0.0, 2.0 * M_PI));
  }
  cplx on_circle() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

  Mat matrix(Eigen::Index rows, Eigen::Index cols) {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian();
    return m;
  }
  Mat matrix(Eigen::Index n) { return matrix(n, n); }

  Mat hermitian(Eigen::Index n) {
    const Mat g = matrix(n);
    return (g + g.adjoint()) / 2.0;
  }

  // Unitary via Gram-Schmidt on Gaussian columns.
  Mat unitary(Eigen::Index n) {
    Mat q = matrix(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < j; ++k) q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
      q.col(j) /= q.col(j).norm();
    }
    return q;
  }

 private:
  std::mt19937_64 eng_;
};

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Largest singular value by power iteration on M*M.
inline double power_iteration_norm(const Mat& m, int iters = 2000) {
  Eigen::VectorXcd x = Eigen::VectorXcd::Ones(m.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) += cplx(0.1 * double(i), 0.05);
  x.normalize();
  double lambda = 0.0;
  for (int k = 0; k < iters; ++k) {
    Eigen::VectorXcd y = m.adjoint() * (m * x);
    lambda = y.norm();
    if (lambda == 0.0) return 0.0;
    x = y / lambda;
  }
  return std::sqrt(lambda);
}

}  // namespace rho_test
