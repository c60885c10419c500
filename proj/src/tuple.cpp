#include "rho/tuple.hpp"

#include <numeric>
#include <string>

namespace rho {

OperatorTuple::OperatorTuple(std::vector<Matrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) throw InputError("OperatorTuple: at least one matrix is required");
  const Index d = mats_.front().rows();
  for (std::size_t k = 0; k < mats_.size(); ++k) {
    const Matrix& m = mats_[k];
    require_square(m, "OperatorTuple");
    require_finite(m, "OperatorTuple");
    if (m.rows() != d) {
      throw InputError("OperatorTuple: matrix " + std::to_string(k) + " has dimension " +
                       std::to_string(m.rows()) + ", expected " + std::to_string(d));
    }
  }
}

OperatorTuple OperatorTuple::single(Matrix a) { return OperatorTuple({std::move(a)}); }

OperatorTuple OperatorTuple::zeros(Index n_vars, Index dim) {
  return OperatorTuple(
      std::vector<Matrix>(static_cast<std::size_t>(n_vars), Matrix::Zero(dim, dim)));
}

OperatorTuple OperatorTuple::scaled(cplx s) const {
  std::vector<Matrix> out;
  out.reserve(mats_.size());
  for (const auto& m : mats_) out.push_back(s * m);
  return OperatorTuple(std::move(out));
}

OperatorTuple OperatorTuple::padded(Index n_vars) const {
  if (n_vars < this->n_vars()) throw InputError("OperatorTuple::padded: cannot shrink");
  std::vector<Matrix> out = mats_;
  out.resize(static_cast<std::size_t>(n_vars), Matrix::Zero(dim(), dim()));
  return OperatorTuple(std::move(out));
}

double OperatorTuple::max_norm() const {
  double best = 0.0;
  for (const auto& m : mats_) best = std::max(best, detail::op_norm_unchecked(m));
  return best;
}

double OperatorTuple::norm_sum() const {
  double s = 0.0;
  for (const auto& m : mats_) s += detail::op_norm_unchecked(m);
  return s;
}

double OperatorTuple::commutator_residual() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < mats_.size(); ++k) {
    for (std::size_t j = k + 1; j < mats_.size(); ++j) {
      const Matrix c = mats_[k] * mats_[j] - mats_[j] * mats_[k];
      worst = std::max(worst, detail::op_norm_unchecked(c));
    }
  }
  return worst;
}

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
  if (c_.empty()) throw InputError("MultiIndex: at least one component is required");
  for (int v : c_) {
    if (v < 0) throw InputError("MultiIndex: components must be nonnegative");
  }
}

MultiIndex MultiIndex::unit(Index n_vars, Index k) {
  std::vector<int> c(static_cast<std::size_t>(n_vars), 0);
  c.at(static_cast<std::size_t>(k)) = 1;
  return MultiIndex(std::move(c));
}

int MultiIndex::order() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0); }

double MultiIndex::factorial() const {
  double f = 1.0;
  for (int v : c_) {
    for (int i = 2; i <= v; ++i) f *= i;
  }
  return f;
}

int MultiIndex::support_size() const noexcept {
  int s = 0;
  for (int v : c_) s += (v > 0);
  return s;
}

namespace {

void fill_indices(std::vector<int>& cur, std::size_t pos, int remaining,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    fill_indices(cur, pos + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_order(Index n_vars, int order) {
  if (n_vars < 1) throw InputError("multi_indices_of_order: n_vars must be >= 1");
  if (order < 0) throw InputError("multi_indices_of_order: order must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n_vars), 0);
  fill_indices(cur, 0, order, out);
  return out;
}

MatrixPolynomial::MatrixPolynomial(Index n_vars, Index dim) : n_vars_(n_vars), dim_(dim) {
  if (n_vars < 1) throw InputError("MatrixPolynomial: n_vars must be >= 1");
  if (dim < 1) throw InputError("MatrixPolynomial: coefficient dimension must be >= 1");
}

void MatrixPolynomial::add_term(const MultiIndex& t, const Matrix& coef) {
  if (t.n_vars() != n_vars_) throw InputError("MatrixPolynomial: index has wrong arity");
  if (coef.rows() != dim_ || coef.cols() != dim_) {
    throw InputError("MatrixPolynomial: coefficient has wrong dimension");
  }
  require_finite(coef, "MatrixPolynomial");
  auto [it, inserted] = terms_.try_emplace(t, coef);
  if (!inserted) it->second += coef;
}

bool MatrixPolynomial::has_mixed_terms() const {
  for (const auto& [t, coef] : terms_) {
    if (t.support_size() > 1) return true;
  }
  return false;
}

}  // namespace rho
