#pragma once

#include <map>
#include <vector>

#include "rho/linalg.hpp"

namespace rho {

/// N square matrices of a common dimension d: A = (A_1, ..., A_N).
class OperatorTuple {
 public:
  explicit OperatorTuple(std::vector<Matrix> mats);

  static OperatorTuple single(Matrix a);
  static OperatorTuple zeros(Index n_vars, Index dim);

  Index n_vars() const noexcept { return static_cast<Index>(mats_.size()); }
  Index dim() const noexcept { return mats_.front().rows(); }

  const Matrix& operator[](Index k) const { return mats_[static_cast<std::size_t>(k)]; }
  const std::vector<Matrix>& mats() const noexcept { return mats_; }
  auto begin() const noexcept { return mats_.begin(); }
  auto end() const noexcept { return mats_.end(); }

  OperatorTuple scaled(cplx s) const;
  /// The tuple padded with zero matrices up to `n_vars` entries.
  OperatorTuple padded(Index n_vars) const;

  /// max_k ‖A_k‖
  double max_norm() const;
  /// Σ_k ‖A_k‖, an upper bound for sup ‖zA‖ over the closed polydisk.
  double norm_sum() const;
  /// max_{k<j} ‖A_k A_j − A_j A_k‖
  double commutator_residual() const;

 private:
  std::vector<Matrix> mats_;
};

/// t = (t_1, ..., t_N) with nonnegative entries.
class MultiIndex {
 public:
  static constexpr int kDefaultMaxOrder = 16;

  explicit MultiIndex(std::vector<int> components);
  static MultiIndex unit(Index n_vars, Index k);

  Index n_vars() const noexcept { return static_cast<Index>(c_.size()); }
  int operator[](Index k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& components() const noexcept { return c_; }

  /// |t| = Σ t_k
  int order() const noexcept;
  /// t! = Π t_k!
  double factorial() const;
  /// Number of variables with t_k > 0.
  int support_size() const noexcept;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> c_;
};

/// All t with |t| == order, in lexicographically decreasing order of components.
std::vector<MultiIndex> multi_indices_of_order(Index n_vars, int order);

/// f(z) = Σ_t f̂_t z^t with matrix coefficients of a common dimension.
class MatrixPolynomial {
 public:
  MatrixPolynomial(Index n_vars, Index dim);

  void add_term(const MultiIndex& t, const Matrix& coef);

  Index n_vars() const noexcept { return n_vars_; }
  Index dim() const noexcept { return dim_; }
  const std::map<MultiIndex, Matrix>& terms() const noexcept { return terms_; }
  bool has_mixed_terms() const;

 private:
  Index n_vars_;
  Index dim_;
  std::map<MultiIndex, Matrix> terms_;
};

}  // namespace rho
