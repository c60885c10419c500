#include "rho/linalg.hpp"

#include <string>

namespace rho {

Embedding::Embedding(Index ambient_dim, Matrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_dim_) {
    throw InputError("Embedding: basis has " + std::to_string(basis_.rows()) +
                     " rows, expected ambient dimension " + std::to_string(ambient_dim_));
  }
  if (basis_.cols() > ambient_dim_) {
    throw InputError("Embedding: more basis vectors than the ambient dimension");
  }
  require_finite(basis_, "Embedding");
  const Matrix gram = basis_.adjoint() * basis_;
  const double dev = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (basis_.cols() > 0 && dev > 1e-12) {
    throw InputError("Embedding: basis is not orthonormal (Gram deviation " +
                     std::to_string(dev) + ")");
  }
}

Embedding Embedding::identity(Index n) { return Embedding(n, Matrix::Identity(n, n)); }

Embedding Embedding::coordinates(Index n, const std::vector<Index>& indices) {
  Matrix basis = Matrix::Zero(n, static_cast<Index>(indices.size()));
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const Index i = indices[j];
    if (i < 0 || i >= n) throw InputError("Embedding::coordinates: index out of range");
    basis(i, static_cast<Index>(j)) = 1.0;
  }
  return Embedding(n, std::move(basis));
}

}  // namespace rho
