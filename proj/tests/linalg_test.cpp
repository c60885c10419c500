#include <gtest/gtest.h>

#include <limits>

#include "rho/linalg.hpp"
#include "test_support.hpp"

using namespace rho;
using rho_test::Gen;

namespace {

// Characteristic polynomial coefficients by Faddeev-LeVerrier, roots from the companion matrix.
std::vector<double> charpoly_roots(const Matrix& h) {
  const Index n = h.rows();
  std::vector<cplx> c(std::size_t(n) + 1);
  c[std::size_t(n)] = 1.0;
  Matrix m = Matrix::Zero(n, n);
  const Matrix id = Matrix::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = h * m + c[std::size_t(n - k + 1)] * id;
    c[std::size_t(n - k)] = -(h * m).trace() / double(k);
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (Index i = 0; i < n; ++i) comp(i, n - 1) = -c[std::size_t(i)].real();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<double> roots;
  for (Index i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i).real());
  return roots;
}

}  // namespace

TEST(OpNorm, Identity) { EXPECT_NEAR(op_norm(Matrix::Identity(3, 3)), 1.0, 1e-14); }

TEST(OpNorm, NilpotentBlock) {
  Matrix b = Matrix::Zero(2, 2);
  b(0, 1) = 2.0;
  EXPECT_NEAR(op_norm(b), 2.0, 1e-14);
}

TEST(OpNorm, MatchesPowerIteration) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Gen g(seed);
    const Matrix m = g.matrix(4);
    EXPECT_NEAR(op_norm(m), rho_test::power_iteration_norm(m), 1e-8) << "seed " << seed;
  }
}

TEST(OpNorm, RectangularAndEmpty) {
  Gen g(3);
  const Matrix m = g.matrix(2, 5);
  EXPECT_NEAR(op_norm(m), rho_test::power_iteration_norm(m), 1e-8);
  EXPECT_EQ(op_norm(Matrix(0, 0)), 0.0);
}

TEST(OpNorm, RejectsNonFinite) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(op_norm(m), InputError);
  m(1, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(op_norm(m), InputError);
}

TEST(MinEig, ZeroAndDiagonal) {
  EXPECT_EQ(min_eig_hermitian(Matrix::Zero(3, 3)), 0.0);
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 5.0;
  EXPECT_NEAR(min_eig_hermitian(d), -1.0, 1e-14);
  EXPECT_NEAR(max_eig_hermitian(d), 5.0, 1e-14);
}

TEST(MinEig, MatchesCompanionRoots) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Gen g(seed);
    const Matrix h = g.hermitian(5);
    const auto roots = charpoly_roots(h);
    EXPECT_NEAR(min_eig_hermitian(h), *std::min_element(roots.begin(), roots.end()), 1e-8)
        << "seed " << seed;
  }
}

TEST(MinEig, RejectsAsymmetric) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(min_eig_hermitian(m), InputError);
  EXPECT_THROW(min_eig_hermitian(Matrix::Zero(2, 3)), InputError);
}

TEST(MinEig, ToleratesRoundoffAsymmetry) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 1e-13;
  EXPECT_NEAR(min_eig_hermitian(m), 1.0, 1e-12);
}

TEST(SpectralRadius, Examples) {
  Matrix n = Matrix::Zero(2, 2);
  n(0, 1) = 1.0;
  EXPECT_NEAR(spectral_radius(n), 0.0, 1e-12);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.9;
  EXPECT_NEAR(spectral_radius(d), 0.9, 1e-14);
}

TEST(SpectralRadius, PowerLimitCrossCheck) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Gen g(seed);
    const Matrix m = g.matrix(4);
    Matrix p = Matrix::Identity(4, 4);
    const double s = op_norm(m);
    for (int k = 0; k < 64; ++k) p = (p * (m / s)).eval();
    const double oracle = s * std::pow(op_norm(p), 1.0 / 64.0);
    EXPECT_NEAR(spectral_radius(m), oracle, 0.05 * spectral_radius(m)) << "seed " << seed;
    EXPECT_NEAR(spectral_radius_power_limit(m, 64), oracle, 1e-9 * oracle);
  }
}

TEST(SpectralRadius, RejectsNonSquare) {
  EXPECT_THROW(spectral_radius(Matrix::Zero(2, 3)), InputError);
  EXPECT_THROW(spectral_radius_power_limit(Matrix::Identity(2, 2), 0), InputError);
}

TEST(Kron, Examples) {
  Gen g(1);
  const Matrix a = g.matrix(3);
  EXPECT_EQ(kron(a, Matrix::Identity(1, 1)), a);
  EXPECT_EQ(kron(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), Matrix(Matrix::Identity(6, 6)));
}

TEST(Kron, MixedProductIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Gen g(seed);
    const Matrix a = g.matrix(2), b = g.matrix(2), c = g.matrix(2), d = g.matrix(2);
    const Matrix lhs = kron(a, b) * kron(c, d);
    const Matrix rhs = kron(Matrix(a * c), Matrix(b * d));
    EXPECT_LT(rho_test::max_abs(lhs - rhs), 1e-12);
    EXPECT_NEAR(op_norm(kron(a, b)), op_norm(a) * op_norm(b), 1e-9);
  }
}

TEST(Compress, IdentityGivesIdentity) {
  const Embedding e = Embedding::coordinates(5, {3, 1});
  EXPECT_LT(rho_test::max_abs(compress(Matrix::Identity(5, 5), e) - Matrix::Identity(2, 2)), 1e-15);
}

TEST(Compress, ShiftOntoTwoCoordinates) {
  Matrix s = Matrix::Zero(8, 8);
  for (Index j = 0; j < 8; ++j) s((j + 1) % 8, j) = 1.0;
  const Matrix c = compress(s, Embedding::coordinates(8, {1, 0}));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 1) = 1.0;
  EXPECT_EQ(c, expected);
}

TEST(Compress, FullSpaceCanonicalIsExact) {
  Gen g(2);
  const Matrix m = g.matrix(4);
  EXPECT_EQ(compress(m, Embedding::identity(4)), m);
}

TEST(Compress, DimensionMismatch) {
  EXPECT_THROW(compress(Matrix::Identity(3, 3), Embedding::identity(4)), InputError);
}

TEST(EmbeddingType, RejectsNonOrthonormalBasis) {
  Matrix b = Matrix::Zero(3, 2);
  b(0, 0) = 1.0;
  b(0, 1) = 1.0;
  EXPECT_THROW(Embedding(3, b), InputError);
  EXPECT_THROW(Embedding(1, Matrix::Identity(2, 2)), InputError);
  EXPECT_THROW(Embedding::coordinates(3, {0, 3}), InputError);
}

TEST(HermitianPart, RealPartOfScalar) {
  Matrix m(1, 1);
  m(0, 0) = cplx(2.0, 5.0);
  EXPECT_EQ(hermitian_part(m)(0, 0), cplx(2.0, 0.0));
}

// Invariants over random inputs.

TEST(LinalgProperty, Submultiplicative) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Gen g(seed);
    const Index n = 2 + Index(seed % 4);
    const Matrix m = g.matrix(n), k = g.matrix(n);
    EXPECT_LE(op_norm(Matrix(m * k)), op_norm(m) * op_norm(k) + 1e-9) << "seed " << seed;
  }
}

TEST(LinalgProperty, SpectralRadiusBelowNorm) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Gen g(seed);
    const Matrix m = g.matrix(2 + Index(seed % 4));
    EXPECT_LE(spectral_radius(m), op_norm(m) + 1e-9) << "seed " << seed;
  }
}

TEST(LinalgProperty, MinEigIsNegatedMaxOfNegation) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Gen g(seed);
    const Matrix h = g.hermitian(2 + Index(seed % 4));
    const Matrix neg = -h;
    EXPECT_NEAR(min_eig_hermitian(h), -max_eig_hermitian(neg), 1e-10) << "seed " << seed;
  }
}

TEST(LinalgProperty, CompressIsContractive) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Gen g(seed);
    const Index n = 3 + Index(seed % 3);
    const Matrix m = g.matrix(n);
    const Matrix q = g.unitary(n);
    const Embedding e(n, q.leftCols(2));
    EXPECT_LE(op_norm(compress(m, e)), op_norm(m) + 1e-9) << "seed " << seed;
  }
}
