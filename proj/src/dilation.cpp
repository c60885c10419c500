#include "rho/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rho {

namespace {

void require_consistent(const OperatorTuple& small, const OperatorTuple& big, const Embedding& e,
                        double rho, int n, const char* what) {
  if (small.n_vars() != big.n_vars()) {
    throw InputError(std::string(what) + ": small and big tuples have different arity");
  }
  if (big.dim() != e.ambient_dim()) {
    throw InputError(std::string(what) + ": big tuple dimension does not match the embedding");
  }
  if (small.dim() != e.dim()) {
    throw InputError(std::string(what) + ": small tuple dimension does not match the embedding");
  }
  if (!(rho > 0.0)) throw InputError(std::string(what) + ": rho must be positive");
  if (n < 1) throw InputError(std::string(what) + ": word length must be >= 1");
}

// Ã_{w_0} ... Ã_{w_{n-1}} B, applied right to left.
Matrix word_on(const OperatorTuple& a, const std::vector<int>& word, const Matrix& basis) {
  Matrix x = basis;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = (a[*it] * x).eval();
  return x;
}

Matrix word_product(const OperatorTuple& a, const std::vector<int>& word) {
  return word_on(a, word, Matrix::Identity(a.dim(), a.dim()));
}

std::string word_string(const std::vector<int>& word) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i] + 1;
  os << ")";
  return os.str();
}

std::string index_string(const MultiIndex& t) {
  std::ostringstream os;
  os << "t=(";
  for (Index k = 0; k < t.n_vars(); ++k) os << (k ? "," : "") << t[k];
  os << ")";
  return os.str();
}

DilationWitness make_witness(const OperatorTuple& small, const OperatorTuple& big,
                             const Embedding& e, double rho, DilationMode mode, int n) {
  return DilationWitness{small, big, e, rho, mode, n, 0, 0.0, std::vector<double>(std::size_t(n)),
                         ""};
}

void record(DilationWitness& w, int length, double res, const std::string& label) {
  auto& slot = w.residual_by_length[std::size_t(length - 1)];
  slot = std::max(slot, res);
  if (w.worst.empty() || res > w.max_residual) {
    w.worst = label;
    w.max_residual = res;
  }
}

void finish(DilationWitness& w) {
  w.verified_word_length = 0;
  for (double r : w.residual_by_length) {
    if (!(r < kDilationTol)) break;
    ++w.verified_word_length;
  }
}

Matrix shift(int m) {
  Matrix u = Matrix::Zero(m, m);
  for (int j = 0; j < m; ++j) u((j + 1) % m, j) = 1.0;
  return u;
}

}  // namespace

const char* to_string(DilationMode m) noexcept {
  return m == DilationMode::Symmetrized ? "Symmetrized" : "Uniform";
}

const char* to_string(Growth g) noexcept {
  switch (g) {
    case Growth::Diverges:
      return "Diverges";
    case Growth::Bounded:
      return "Bounded";
    case Growth::Inconclusive:
      return "Inconclusive";
  }
  return "unknown";
}

DilationWitness verify_rho_dilation(const OperatorTuple& small, const OperatorTuple& big,
                                    const Embedding& e, double rho, int t_max) {
  require_consistent(small, big, e, rho, t_max, "verify_rho_dilation");
  if (t_max > MultiIndex::kDefaultMaxOrder) {
    throw CapacityError("verify_rho_dilation: t_max exceeds the maximum word length " +
                        std::to_string(MultiIndex::kDefaultMaxOrder));
  }
  DilationWitness w = make_witness(small, big, e, rho, DilationMode::Symmetrized, t_max);
  const Matrix& basis = e.basis();
  for (int n = 1; n <= t_max; ++n) {
    for (const MultiIndex& t : multi_indices_of_order(small.n_vars(), n)) {
      std::vector<int> letters;
      for (Index k = 0; k < t.n_vars(); ++k) letters.insert(letters.end(), std::size_t(t[k]), int(k));
      Matrix acc = Matrix::Zero(basis.rows(), basis.cols());
      double words = 0.0;
      do {
        acc += word_on(big, letters, basis);
        words += 1.0;
      } while (std::next_permutation(letters.begin(), letters.end()));
      const Matrix rhs = rho * (basis.adjoint() * acc) / words;
      record(w, n, detail::op_norm_unchecked(sym_multipower(small, t) - rhs), index_string(t));
    }
  }
  finish(w);
  return w;
}

DilationWitness verify_uniform_rho_dilation(const OperatorTuple& small, const OperatorTuple& big,
                                            const Embedding& e, double rho, int n_max) {
  require_consistent(small, big, e, rho, n_max, "verify_uniform_rho_dilation");
  if (n_max > 6) {
    throw CapacityError("verify_uniform_rho_dilation: n_max = " + std::to_string(n_max) +
                        " exceeds 6");
  }
  DilationWitness w = make_witness(small, big, e, rho, DilationMode::Uniform, n_max);
  const Matrix& basis = e.basis();
  const int nv = int(small.n_vars());
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> word(std::size_t(n), 0);
    while (true) {
      const Matrix rhs = rho * (basis.adjoint() * word_on(big, word, basis));
      record(w, n, detail::op_norm_unchecked(word_product(small, word) - rhs), word_string(word));
      std::size_t k = word.size();
      while (k > 0 && ++word[k - 1] == nv) word[--k] = 0;
      if (k == 0) break;
    }
  }
  finish(w);
  return w;
}

TorusUnitarityCertificate torus_unitarity(const OperatorTuple& big) {
  const Index d = big.dim();
  const Matrix id = Matrix::Identity(d, d);
  Matrix left = -id;
  Matrix right = -id;
  TorusUnitarityCertificate c;
  for (Index k = 0; k < big.n_vars(); ++k) {
    left += big[k].adjoint() * big[k];
    right += big[k] * big[k].adjoint();
    for (Index j = 0; j < big.n_vars(); ++j) {
      if (j == k) continue;
      c.cross_residual_left =
          std::max(c.cross_residual_left, detail::op_norm_unchecked(big[k].adjoint() * big[j]));
      c.cross_residual_right =
          std::max(c.cross_residual_right, detail::op_norm_unchecked(big[k] * big[j].adjoint()));
    }
  }
  c.residual_sum_left = detail::op_norm_unchecked(left);
  c.residual_sum_right = detail::op_norm_unchecked(right);
  constexpr double tol = 1e-10;
  c.passed = c.residual_sum_left < tol && c.residual_sum_right < tol &&
             c.cross_residual_left < tol && c.cross_residual_right < tol;
  return c;
}

PopescuCertificate popescu_conditions(const OperatorTuple& v, const Embedding* domain) {
  const Index d = v.dim();
  if (domain && domain->ambient_dim() != d) {
    throw InputError("popescu_conditions: domain embedding does not match the tuple dimension");
  }
  PopescuCertificate c;
  c.restricted = domain != nullptr;
  std::vector<Matrix> cols;
  for (const Matrix& vk : v) cols.push_back(domain ? Matrix(vk * domain->basis()) : vk);
  const Index k_dim = domain ? domain->dim() : d;
  const Matrix id_k = Matrix::Identity(k_dim, k_dim);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    c.isometry_residual =
        std::max(c.isometry_residual, detail::op_norm_unchecked(cols[k].adjoint() * cols[k] - id_k));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == k) continue;
      c.orthogonality_residual = std::max(c.orthogonality_residual,
                                          detail::op_norm_unchecked(cols[k].adjoint() * cols[j]));
    }
  }
  Matrix gap = Matrix::Identity(d, d);
  for (const Matrix& vk : v) gap -= vk * vk.adjoint();
  c.row_contraction_min_eig = double(detail::hermitian_eigenvalues_unchecked(gap).minCoeff());

  constexpr double tol = 1e-10;
  c.isometry = c.isometry_residual < tol;
  c.orthogonal_ranges = c.orthogonality_residual < tol;
  c.row_contraction = c.row_contraction_min_eig >= -tol;
  c.consistent = (c.isometry && c.orthogonal_ranges) == (c.isometry && c.row_contraction);
  return c;
}

ShiftDilation build_shift_unitary_rho_dilation(double rho, int m) {
  if (!(rho > 0.0)) throw InputError("build_shift_unitary_rho_dilation: rho must be positive");
  if (m < 8) {
    throw CapacityError("build_shift_unitary_rho_dilation: ambient size " + std::to_string(m) +
                        " is below the minimum 8");
  }
  return ShiftDilation{OperatorTuple::single(shift(m)), Embedding::coordinates(m, {1, 0}), m - 2};
}

Matrix nilpotent_block(double rho) {
  Matrix b = Matrix::Zero(2, 2);
  b(0, 1) = rho;
  return b;
}

OperatorTuple build_thm53_pair(double rho) {
  if (!(rho > 0.0)) throw InputError("build_thm53_pair: rho must be positive");
  const Matrix b = nilpotent_block(rho);
  Matrix a1 = Matrix::Zero(4, 4);
  Matrix a2 = Matrix::Zero(4, 4);
  a1.topLeftCorner(2, 2) = b;
  a2.bottomLeftCorner(2, 2) = b;
  OperatorTuple a({a1, a2});
  for (const Point& z : {Point{1.0, 1.0}, Point{1.0, -1.0}, Point{cplx(0, 1), 1.0},
                         Point{cplx(0, -1), cplx(0, 1)}}) {
    const double n = detail::op_norm_unchecked(eval_pencil(a, z));
    if (std::abs(n - std::sqrt(2.0) * rho) > 1e-9 * std::max(1.0, rho)) {
      throw InternalError("build_thm53_pair: pencil norm differs from sqrt(2) rho");
    }
  }
  return a;
}

PopescuDilation build_thm53_popescu_dilation(double rho, int m, int depth) {
  if (!(rho > 0.0)) throw InputError("build_thm53_popescu_dilation: rho must be positive");
  if (depth < 3) {
    throw CapacityError("build_thm53_popescu_dilation: depth " + std::to_string(depth) +
                        " is below the minimum 3");
  }
  if (depth > 12) {
    throw CapacityError("build_thm53_popescu_dilation: depth " + std::to_string(depth) +
                        " exceeds the maximum 12");
  }
  const ShiftDilation sd = build_shift_unitary_rho_dilation(rho, m);
  const Matrix& u = sd.big[0];
  const int leaves = 1 << (depth - 1);
  const Index dim = Index(leaves) * m;
  Matrix v1 = Matrix::Zero(dim, dim);
  Matrix v2 = Matrix::Zero(dim, dim);
  // Summands are numbered 1..leaves; summand j occupies rows (j−1)M .. jM−1.
  for (int j = 1; j <= leaves; ++j) {
    if (2 * j - 1 <= leaves) v1.block(Index(2 * j - 2) * m, Index(j - 1) * m, m, m) = u;
    if (2 * j <= leaves) v2.block(Index(2 * j - 1) * m, Index(j - 1) * m, m, m) = u;
  }
  const std::vector<Index> x_idx{1, 0, Index(m) + 1, Index(m)};
  std::vector<Index> inner;
  for (Index i = 0; i < Index(leaves / 2) * m; ++i) inner.push_back(i);
  return PopescuDilation{OperatorTuple({v1, v2}), Embedding::coordinates(dim, x_idx),
                         Embedding::coordinates(dim, inner), std::min(depth - 1, m - 2)};
}

SimilarityReport verify_similarity(const OperatorTuple& a, const OperatorTuple& b,
                                   const Matrix& s) {
  require_square(s, "verify_similarity");
  require_finite(s, "verify_similarity");
  if (a.n_vars() != b.n_vars() || a.dim() != b.dim() || s.rows() != a.dim()) {
    throw InputError("verify_similarity: inconsistent dimensions");
  }
  Eigen::JacobiSVD<Matrix> svd(s);
  const auto& sv = svd.singularValues();
  SimilarityReport r;
  r.sigma_min = sv.size() ? sv(sv.size() - 1) : 0.0;
  if (!(r.sigma_min > 1e-12)) {
    throw InputError("verify_similarity: S is singular (smallest singular value " +
                     std::to_string(r.sigma_min) + ")");
  }
  r.condition_number = sv(0) / r.sigma_min;
  for (Index k = 0; k < a.n_vars(); ++k) {
    r.residual = std::max(r.residual, detail::op_norm_unchecked(s * a[k] - b[k] * s));
  }
  r.passed = r.residual < 1e-9;
  return r;
}

DivergenceReport divergence_probe(const Matrix& m, int n_max) {
  require_square(m, "divergence_probe");
  require_finite(m, "divergence_probe");
  if (n_max < 2) throw InputError("divergence_probe: n_max must be >= 2");
  if (n_max > 64) throw CapacityError("divergence_probe: n_max must be <= 64");
  constexpr double cap = 1e300;
  DivergenceReport rep;
  // p holds M^n / ‖M^n‖ and log_scale = log ‖M^n‖, so nothing overflows before the cap.
  Matrix p = m;
  double log_scale = 0.0;
  bool hit_zero = false;
  for (int n = 1; n <= n_max; ++n) {
    if (hit_zero || rep.capped) {
      rep.norms.push_back(hit_zero ? 0.0 : cap);
      continue;
    }
    if (n > 1) p = (p * m).eval();
    const double s = detail::op_norm_unchecked(p);
    if (s == 0.0) {
      hit_zero = true;
      rep.norms.push_back(0.0);
      continue;
    }
    log_scale += std::log(s);
    p /= s;
    if (log_scale > std::log(cap)) {
      rep.capped = true;
      rep.norms.push_back(cap);
    } else {
      rep.norms.push_back(std::exp(log_scale));
    }
  }

  const int first = n_max / 2;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int cnt = 0;
  rep.monotone_tail = true;
  for (int n = first; n <= n_max; ++n) {
    const double v = rep.norms[std::size_t(n - 1)];
    if (n > first && v < rep.norms[std::size_t(n - 2)] * (1.0 - 1e-12)) rep.monotone_tail = false;
    if (v <= 0.0) continue;
    const double y = std::log(v);
    sx += n;
    sy += y;
    sxx += double(n) * n;
    sxy += n * y;
    ++cnt;
  }
  if (cnt >= 2) rep.exponent = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);

  if (rep.capped) {
    rep.growth = Growth::Diverges;
  } else if (hit_zero || rep.exponent <= 0.01) {
    rep.growth = Growth::Bounded;
  } else {
    rep.growth = rep.monotone_tail ? Growth::Diverges : Growth::Inconclusive;
  }
  return rep;
}

}  // namespace rho
