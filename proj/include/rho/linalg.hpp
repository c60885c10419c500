#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rho/errors.hpp"

namespace rho {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

template <typename Derived>
using PlainOf = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!m.allFinite()) throw InputError(std::string(what) + ": non-finite entries");
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InputError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected square");
  }
}

namespace detail {

// Largest eigenvalue of the smaller Gram matrix; no input validation.
template <typename Derived>
double op_norm_unchecked(const Eigen::MatrixBase<Derived>& m) {
  using Plain = PlainOf<Derived>;
  if (m.size() == 0) return 0.0;
  Plain gram = (m.rows() <= m.cols()) ? Plain(m * m.adjoint()) : Plain(m.adjoint() * m);
  if (gram.rows() == 1) return std::sqrt(std::max(0.0, double(std::real(gram(0, 0)))));
  Eigen::SelfAdjointEigenSolver<Plain> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, double(es.eigenvalues().maxCoeff())));
}

template <typename Derived>
auto hermitian_eigenvalues_unchecked(const Eigen::MatrixBase<Derived>& h) {
  using Plain = PlainOf<Derived>;
  Plain sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Plain> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().eval();
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& h, const char* what) {
  require_square(h, what);
  require_finite(h, what);
  if (h.size() == 0) return;
  const double scale = std::max(1.0, double(h.cwiseAbs().maxCoeff()));
  const double asym = double((h - h.adjoint()).cwiseAbs().maxCoeff());
  if (asym > 1e-10 * scale) {
    throw InputError(std::string(what) + ": matrix is not Hermitian (asymmetry " +
                     std::to_string(asym) + ")");
  }
}

}  // namespace detail

/// Operator (spectral) norm, i.e. the largest singular value.
template <typename Derived>
double op_norm(const Eigen::MatrixBase<Derived>& m) {
  require_finite(m, "op_norm");
  return detail::op_norm_unchecked(m);
}

/// Smallest eigenvalue of a Hermitian matrix. The input is symmetrized as (H + H*)/2
/// after checking that its asymmetry is below 1e-10 relative to its largest entry.
template <typename Derived>
double min_eig_hermitian(const Eigen::MatrixBase<Derived>& h) {
  detail::require_hermitian(h, "min_eig_hermitian");
  if (h.size() == 0) return 0.0;
  return double(detail::hermitian_eigenvalues_unchecked(h).minCoeff());
}

template <typename Derived>
double max_eig_hermitian(const Eigen::MatrixBase<Derived>& h) {
  detail::require_hermitian(h, "max_eig_hermitian");
  if (h.size() == 0) return 0.0;
  return double(detail::hermitian_eigenvalues_unchecked(h).maxCoeff());
}

/// ‖M^n‖^{1/n} accumulated with per-step renormalization, so large n cannot overflow.
template <typename Derived>
double spectral_radius_power_limit(const Eigen::MatrixBase<Derived>& m, int n) {
  require_square(m, "spectral_radius_power_limit");
  require_finite(m, "spectral_radius_power_limit");
  if (n < 1) throw InputError("spectral_radius_power_limit: n must be >= 1");
  using Plain = PlainOf<Derived>;
  const Plain base = m;
  Plain p = base;
  double log_norm = 0.0;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) p = (p * base).eval();
    const double s = detail::op_norm_unchecked(p);
    if (s == 0.0) return 0.0;
    log_norm += std::log(s);
    p /= s;
  }
  return std::exp(log_norm / n);
}

/// max |λ| over the eigenvalues. Up to dimension 64 this is an eigenvalue computation;
/// larger inputs fall back to the renormalized power limit with n = 256.
template <typename Derived>
double spectral_radius(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "spectral_radius");
  require_finite(m, "spectral_radius");
  if (m.size() == 0) return 0.0;
  if (m.rows() > 64) return spectral_radius_power_limit(m, 256);
  const Matrix c = m.template cast<cplx>();
  Eigen::ComplexEigenSolver<Matrix> es(c, false);
  if (es.info() != Eigen::Success) throw EvaluationError("spectral_radius: eigensolver failed");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Isometric inclusion of a k-dimensional subspace into C^ambient_dim, given by an
/// orthonormal basis (the columns of `basis`).
class Embedding {
 public:
  Embedding(Index ambient_dim, Matrix basis);

  static Embedding identity(Index n);
  /// Ordered coordinate vectors e_{i_0}, e_{i_1}, ... of C^n.
  static Embedding coordinates(Index n, const std::vector<Index>& indices);

  Index ambient_dim() const noexcept { return ambient_dim_; }
  Index dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

 private:
  Index ambient_dim_;
  Matrix basis_;
};

/// P_X M |_X expressed in the embedding's basis: B* M B.
template <typename Derived>
Matrix compress(const Eigen::MatrixBase<Derived>& m, const Embedding& e) {
  require_square(m, "compress");
  if (m.rows() != e.ambient_dim()) {
    throw InputError("compress: operator dimension " + std::to_string(m.rows()) +
                     " does not match embedding ambient dimension " +
                     std::to_string(e.ambient_dim()));
  }
  return e.basis().adjoint() * m.template cast<cplx>() * e.basis();
}

/// Re X = (X + X*)/2.
template <typename Derived>
auto hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  return ((m + m.adjoint()) / 2.0).eval();
}

}  // namespace rho
