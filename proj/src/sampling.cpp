#include "rho/sampling.hpp"

#include <numbers>

namespace rho {

const char* to_string(CommutingFamily f) noexcept {
  switch (f) {
    case CommutingFamily::Normal:
      return "normal";
    case CommutingFamily::Jordan:
      return "jordan";
  }
  return "unknown";
}

Matrix random_complex_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = cplx(g(rng), g(rng));
  }
  return m;
}

Matrix random_unitary(Index n, Rng& rng) {
  const Matrix g = random_complex_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

cplx random_in_disk(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double th = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, th);
}

namespace {

CommutingTuple certify(std::vector<Matrix> mats, CommutingFamily family, std::uint64_t seed) {
  OperatorTuple t(std::move(mats));
  const double res = t.commutator_residual();
  const double mx = t.max_norm();
  return CommutingTuple{std::move(t), res, mx, family, seed};
}

CommutingTuple normal_family(Index dim, Index n_vars, std::uint64_t seed, double cap) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Matrix q = random_unitary(dim, rng);
  std::vector<Matrix> mats;
  for (Index k = 0; k < n_vars; ++k) {
    Vector diag(dim);
    for (Index i = 0; i < dim; ++i) {
      // Half of the joint eigenvalues sit on the distinguished boundary |d| = cap.
      const double r = (u(rng) < 0.5) ? cap : cap * std::sqrt(u(rng));
      diag(i) = std::polar(r, 2.0 * std::numbers::pi * u(rng));
    }
    mats.push_back(q * diag.asDiagonal() * q.adjoint());
  }
  return certify(std::move(mats), CommutingFamily::Normal, seed);
}

CommutingTuple jordan_family(Index dim, Index n_vars, std::uint64_t seed, double cap) {
  Rng rng(seed);
  Matrix j = random_complex_matrix(dim, dim, rng).triangularView<Eigen::StrictlyUpper>();
  const double jn = detail::op_norm_unchecked(j);
  if (jn > 0.0) j /= jn;
  std::vector<Matrix> powers{Matrix::Identity(dim, dim)};
  for (Index p = 1; p < dim; ++p) powers.push_back(powers.back() * j);

  std::vector<Matrix> mats;
  for (Index k = 0; k < n_vars; ++k) {
    Matrix c = Matrix::Zero(dim, dim);
    for (const auto& pw : powers) c += random_in_disk(rng) * pw;
    const double cn = detail::op_norm_unchecked(c);
    if (cn > 0.0) c *= cap / cn;
    mats.push_back(std::move(c));
  }
  return certify(std::move(mats), CommutingFamily::Jordan, seed);
}

}  // namespace

CommutingTuple sample_commuting_tuple(Index dim, Index n_vars, std::uint64_t seed,
                                      double norm_cap, CommutingFamily family) {
  if (dim < 1) throw InputError("sample_commuting_tuple: dim must be >= 1");
  if (n_vars < 1) throw InputError("sample_commuting_tuple: n_vars must be >= 1");
  if (!(norm_cap > 0.0 && norm_cap < 1.0)) {
    throw InputError("sample_commuting_tuple: norm_cap must lie in (0, 1)");
  }
  return family == CommutingFamily::Normal ? normal_family(dim, n_vars, seed, norm_cap)
                                           : jordan_family(dim, n_vars, seed, norm_cap);
}

CommutingTuple sample_commuting_tuple(Index dim, Index n_vars, std::uint64_t seed,
                                      double norm_cap) {
  return sample_commuting_tuple(dim, n_vars, seed, norm_cap,
                                seed % 2 == 0 ? CommutingFamily::Normal : CommutingFamily::Jordan);
}

std::vector<CommutingTuple> sample_commuting_tuples(Index n_vars, int budget, std::uint64_t seed,
                                                    double norm_cap) {
  std::vector<CommutingTuple> out;
  out.reserve(static_cast<std::size_t>(std::max(budget, 0)));
  for (int i = 0; i < budget; ++i) {
    const Index dim = 1 + (i / 2) % 4;
    const auto family = (i % 2 == 0) ? CommutingFamily::Normal : CommutingFamily::Jordan;
    out.push_back(sample_commuting_tuple(dim, n_vars, seed * 1000003ULL + std::uint64_t(i),
                                         norm_cap, family));
  }
  return out;
}

std::vector<Point> torus_grid(Index n_vars, int per_axis, double r) {
  if (n_vars < 1 || per_axis < 1) throw InputError("torus_grid: invalid size");
  std::vector<Point> out;
  std::vector<int> idx(static_cast<std::size_t>(n_vars), 0);
  while (true) {
    Point p;
    for (int i : idx) p.push_back(std::polar(r, 2.0 * std::numbers::pi * i / per_axis));
    out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace rho
