#include "rho/pencil.hpp"

#include <algorithm>
#include <sstream>

namespace rho {

namespace {

void require_arity(const OperatorTuple& a, std::size_t n, const char* what) {
  if (static_cast<std::size_t>(a.n_vars()) != n) {
    throw InputError(std::string(what) + ": point has " + std::to_string(n) +
                     " coordinates, tuple has " + std::to_string(a.n_vars()) + " variables");
  }
}

std::string describe(const Point& z) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (k) os << ", ";
    os << z[k].real() << (z[k].imag() < 0 ? "-" : "+") << std::abs(z[k].imag()) << "i";
  }
  os << ")";
  return os.str();
}

Matrix inverse_or_pole(const Matrix& m, const Point& where, const char* what) {
  Eigen::PartialPivLU<Matrix> lu(m);
  Matrix inv = lu.inverse();
  if (!inv.allFinite() || detail::op_norm_unchecked(inv) * kPoleThreshold >= 1.0) {
    throw PoleError(std::string(what) + ": singular resolvent at z = " + describe(where), where);
  }
  return inv;
}

}  // namespace

Matrix eval_pencil(const OperatorTuple& a, std::span<const cplx> z) {
  require_arity(a, z.size(), "eval_pencil");
  Matrix out = Matrix::Zero(a.dim(), a.dim());
  for (Index k = 0; k < a.n_vars(); ++k) out += z[static_cast<std::size_t>(k)] * a[k];
  return out;
}

Matrix tensor_pencil(const OperatorTuple& a, const OperatorTuple& c) {
  if (a.n_vars() != c.n_vars()) {
    throw InputError("tensor_pencil: tuples have different numbers of variables");
  }
  Matrix out = Matrix::Zero(a.dim() * c.dim(), a.dim() * c.dim());
  for (Index k = 0; k < a.n_vars(); ++k) out += kron(a[k], c[k]);
  return out;
}

Matrix sym_multipower(const OperatorTuple& a, const MultiIndex& t, int max_order) {
  if (t.n_vars() != a.n_vars()) throw InputError("sym_multipower: index arity mismatch");
  const int order = t.order();
  if (order > max_order) {
    throw CapacityError("sym_multipower: |t| = " + std::to_string(order) +
                        " exceeds the maximum word length " + std::to_string(max_order));
  }
  const Index d = a.dim();
  if (order == 0) return Matrix::Identity(d, d);

  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(order));
  for (Index k = 0; k < t.n_vars(); ++k) letters.insert(letters.end(), std::size_t(t[k]), int(k));

  Matrix sum = Matrix::Zero(d, d);
  double words = 0.0;
  do {
    Matrix w = a[letters.front()];
    for (std::size_t i = 1; i < letters.size(); ++i) w = (w * a[letters[i]]).eval();
    sum += w;
    words += 1.0;
  } while (std::next_permutation(letters.begin(), letters.end()));
  // The number of distinct words is |t|!/t!, so the normalized sum is the mean.
  return sum / words;
}

Matrix plain_multipower(const OperatorTuple& a, const MultiIndex& t) {
  if (t.n_vars() != a.n_vars()) throw InputError("plain_multipower: index arity mismatch");
  Matrix out = Matrix::Identity(a.dim(), a.dim());
  for (Index k = 0; k < a.n_vars(); ++k) {
    for (int p = 0; p < t[k]; ++p) out = (out * a[k]).eval();
  }
  return out;
}

Matrix kernel_from_pencil(const Matrix& t, const Matrix& s, double rho) {
  const Index d = t.rows();
  return rho * Matrix::Identity(d, d) - (rho - 1.0) * (t + s.adjoint()) +
         (rho - 2.0) * (s.adjoint() * t);
}

Matrix psi_from_pencil(const Matrix& t, double rho, const Point& where) {
  const Index d = t.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix res = inverse_or_pole(id - t, where, "psi_rho");
  return (1.0 - 2.0 / rho) * id + (2.0 / rho) * res;
}

Matrix phi_from_pencil(const Matrix& t, double rho, const Point& where) {
  const Index d = t.rows();
  const Matrix res =
      inverse_or_pole((rho - 1.0) * t - rho * Matrix::Identity(d, d), where, "phi_rho");
  return t * res;
}

Matrix k_rho_kernel(const OperatorTuple& a, double rho, std::span<const cplx> z,
                    std::span<const cplx> w) {
  if (!(rho > 0.0)) throw InputError("k_rho_kernel: rho must be positive");
  return kernel_from_pencil(eval_pencil(a, z), eval_pencil(a, w), rho);
}

Matrix psi_rho(const OperatorTuple& a, double rho, std::span<const cplx> z) {
  if (!(rho > 0.0)) throw InputError("psi_rho: rho must be positive");
  return psi_from_pencil(eval_pencil(a, z), rho, Point(z.begin(), z.end()));
}

Matrix phi_rho(const OperatorTuple& a, double rho, std::span<const cplx> z) {
  if (!(rho > 0.0)) throw InputError("phi_rho: rho must be positive");
  return phi_from_pencil(eval_pencil(a, z), rho, Point(z.begin(), z.end()));
}

Matrix eval_on_tuple(const MatrixPolynomial& f, const OperatorTuple& c) {
  if (f.n_vars() != c.n_vars()) throw InputError("eval_on_tuple: arity mismatch");
  if (f.has_mixed_terms()) {
    const double res = c.commutator_residual();
    if (res > 1e-10) {
      throw InputError("eval_on_tuple: tuple does not commute (residual " + std::to_string(res) +
                       ") but the polynomial has mixed monomials");
    }
  }
  Matrix out = Matrix::Zero(f.dim() * c.dim(), f.dim() * c.dim());
  for (const auto& [t, coef] : f.terms()) out += kron(coef, plain_multipower(c, t));
  return out;
}

}  // namespace rho
