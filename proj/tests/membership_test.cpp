#include <gtest/gtest.h>

#include "rho/membership.hpp"
#include "rho/radii.hpp"
#include "rho/repro.hpp"
#include "test_support.hpp"

using namespace rho;
using rho_test::Gen;

namespace {

Matrix scalar(cplx a) { return Matrix::Constant(1, 1, a); }

Matrix nil(double c) {
  Matrix b = Matrix::Zero(2, 2);
  b(0, 1) = c;
  return b;
}

// min over an (r, θ) grid of λ_min of ρI − (ρ−1)(T + T*) + (ρ−2) T*T, T = zA.
double brute_kernel_min(const Matrix& a, double rho, int n_r = 40, int n_theta = 720) {
  const Index d = a.rows();
  double best = rho;
  for (int i = 1; i <= n_r; ++i) {
    const double r = double(i) / n_r;
    for (int j = 0; j < n_theta; ++j) {
      const Matrix t = std::polar(r, 2.0 * M_PI * j / n_theta) * a;
      const Matrix k = rho * Matrix::Identity(d, d) - (rho - 1.0) * (t + t.adjoint()) +
                       (rho - 2.0) * t.adjoint() * t;
      Eigen::SelfAdjointEigenSolver<Matrix> es(k, Eigen::EigenvaluesOnly);
      best = std::min(best, es.eigenvalues().minCoeff());
    }
  }
  return best;
}

}  // namespace

TEST(MembershipSingle, IdentityAtRhoOne) {
  for (Index n : {1, 2, 3}) {
    const MembershipVerdict v = membership_single(Matrix::Identity(n, n), 1.0);
    EXPECT_EQ(v.decision, Decision::In);
    EXPECT_GE(v.margin, -v.tol);
    EXPECT_TRUE(v.on_boundary());
    EXPECT_EQ(v.exactness, Exactness::Certified);
  }
}

TEST(MembershipSingle, ScalarBoundary) {
  EXPECT_EQ(membership_single(scalar(1.0 / 3.0), 0.5).decision, Decision::In);
  const MembershipVerdict out = membership_single(scalar(1.0 / 3.0 + 1e-3), 0.5);
  EXPECT_EQ(out.decision, Decision::Out);
  EXPECT_LT(out.margin, -out.tol);
  ASSERT_EQ(out.witness.size(), 1u);
  EXPECT_LE(std::abs(out.witness[0]), 1.0 + 1e-12);
}

TEST(MembershipSingle, NilpotentAtRhoTwo) {
  const MembershipVerdict in = membership_single(nil(2.0), 2.0);
  EXPECT_EQ(in.decision, Decision::In);
  EXPECT_TRUE(in.on_boundary());
  EXPECT_EQ(membership_single(nil(2.02), 2.0).decision, Decision::Out);
}

TEST(MembershipSingle, OutWitnessReproducesMargin) {
  Gen g(12);
  const Matrix a = g.matrix(3);
  for (double rho : {0.5, 1.0, 2.0, 3.0}) {
    const MembershipVerdict v = membership_single(a, rho);
    ASSERT_EQ(v.decision, Decision::Out);
    ASSERT_EQ(v.witness.size(), 1u);
    const OperatorTuple t = OperatorTuple::single(a);
    const Point& z = v.witness;
    if (v.route == "kernel") {
      const double direct = min_eig_hermitian(k_rho_kernel(t, rho, z, z));
      EXPECT_NEAR(direct, v.margin, 1e-9 * std::max(1.0, std::abs(v.margin)));
    }
    EXPECT_LT(v.margin, -v.tol);
  }
}

TEST(MembershipSingle, SpectralWitnessForLargeEigenvalue) {
  // ν(A) > 1 is outside every class; the kernel is negative at z = 1/λ scaled into the disk.
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.5;
  a(1, 1) = 0.1;
  a(0, 1) = 0.3;
  for (double rho : {0.5, 1.0, 2.0, 5.0}) {
    const MembershipVerdict v = membership_single(a, rho);
    EXPECT_EQ(v.decision, Decision::Out) << rho;
  }
}

TEST(MembershipSingle, RecordsParameters) {
  const MembershipVerdict v = membership_single(nil(1.0), 3.0);
  EXPECT_EQ(v.parameters.at("theta_points"), 512.0);
  EXPECT_EQ(v.parameters.at("interior_r_points"), 64.0);
  EXPECT_EQ(v.parameters.at("rho"), 3.0);
  EXPECT_FALSE(v.certificate.empty());
  EXPECT_GE(v.routes.size(), 2u);
}

TEST(MembershipSingle, InputValidation) {
  EXPECT_THROW(membership_single(Matrix::Zero(2, 3), 1.0), InputError);
  EXPECT_THROW(membership_single(Matrix::Identity(2, 2), 0.0), InputError);
  EXPECT_THROW(membership_single(Matrix::Identity(2, 2), 1.0, -1.0), InputError);
}

TEST(MembershipSingle, AgreesWithBruteForceGrid) {
  // Matrices scaled away from the boundary so the coarse oracle grid decides reliably.
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Gen g(seed);
    const Matrix a0 = g.matrix(2 + Index(seed % 2));
    for (double rho : {0.5, 1.0, 2.0, 3.0}) {
      const double w = w_rho(a0, rho, 1e-4).value();
      for (double f : {0.8, 1.25}) {
        const Matrix a = a0 * (f / w);
        const double oracle = brute_kernel_min(a, rho);
        const Decision d = membership_single(a, rho).decision;
        EXPECT_EQ(d, oracle >= 0.0 ? Decision::In : Decision::Out)
            << "seed " << seed << " rho " << rho << " f " << f << " oracle " << oracle;
      }
    }
  }
}

TEST(MembershipRoutes, AllThreeAgreeAwayFromBoundary) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Gen g(seed + 100);
    const Matrix a0 = g.matrix(3);
    for (double rho : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
      const double w = w_rho(a0, rho, 1e-4).value();
      for (double f : {0.9, 1.1}) {
        const Matrix a = a0 * (f / w);
        const Decision expected = f < 1.0 ? Decision::In : Decision::Out;
        EXPECT_EQ(route_decision(kernel_route(a, rho), 1e-9), expected);
        EXPECT_EQ(route_decision(psi_route(a, rho), 1e-9), expected);
        EXPECT_EQ(route_decision(phi_route(a, rho), 1e-9), expected);
      }
    }
  }
}

TEST(MembershipTuple, NilpotentPairAtEpsZero) {
  const OperatorTuple a = build_thm51_pair(0.0);
  const MembershipVerdict v = membership_tuple(a, 2.0);
  EXPECT_EQ(v.decision, Decision::In);
  EXPECT_GE(v.margin, 0.25 - 1e-9);
  EXPECT_EQ(v.exactness, Exactness::Certified);
}

TEST(MembershipTuple, ScaledUnitaryPencilIsOut) {
  Gen g(13);
  const Matrix u = g.unitary(4);
  Matrix p1 = Matrix::Zero(4, 4), p2 = Matrix::Zero(4, 4);
  p1(0, 0) = p1(1, 1) = 1.0;
  p2(2, 2) = p2(3, 3) = 1.0;
  const OperatorTuple a = OperatorTuple({Matrix(u * p1), Matrix(u * p2)}).scaled(2.0);
  const MembershipVerdict v = membership_tuple(a, 2.0);
  EXPECT_EQ(v.decision, Decision::Out);
  EXPECT_EQ(v.witness.size(), 2u);
}

TEST(MembershipTuple, OneVariableDelegates) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Gen g(seed);
    const Matrix a = g.matrix(3) * g.uniform(0.2, 0.8);
    for (double rho : {0.5, 1.0, 2.0, 3.0}) {
      const MembershipVerdict s = membership_single(a, rho);
      const MembershipVerdict t = membership_tuple(OperatorTuple::single(a), rho);
      EXPECT_EQ(s.decision, t.decision);
      EXPECT_EQ(s.margin, t.margin);
    }
  }
}

TEST(MembershipTuple, ThreeVariablesAreNecessaryOnly) {
  Gen g(14);
  const OperatorTuple a = OperatorTuple({g.matrix(2), g.matrix(2), g.matrix(2)}).scaled(0.05);
  MembershipOptions opt;
  opt.budget = 8;
  const MembershipVerdict v = membership_tuple(a, 1.0, opt);
  EXPECT_EQ(v.decision, Decision::In);
  EXPECT_EQ(v.exactness, Exactness::NecessaryOnly);
  EXPECT_EQ(v.parameters.at("budget"), 8.0);

  const MembershipVerdict out = membership_tuple(a.scaled(100.0), 1.0, opt);
  EXPECT_EQ(out.decision, Decision::Out);
  EXPECT_EQ(out.exactness, Exactness::Certified);
}

TEST(MembershipTuple, PaddingWithZerosPreservesVerdict) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Gen g(seed);
    const Matrix a0 = g.matrix(2);
    const double w = w_rho(a0, 1.5, 1e-4).value();
    for (double f : {0.9, 1.1}) {
      const Matrix a = a0 * (f / w);
      const Decision single = membership_single(a, 1.5).decision;
      const Decision padded = membership_tuple(OperatorTuple::single(a).padded(2), 1.5).decision;
      EXPECT_EQ(single, padded) << "seed " << seed << " f " << f;
    }
  }
}

TEST(Verdicts, WildcardAgreement) {
  MembershipVerdict in, out, border;
  in.decision = Decision::In;
  in.margin = 0.5;
  out.decision = Decision::Out;
  out.margin = -0.5;
  border.decision = Decision::Borderline;
  EXPECT_TRUE(verdicts_agree(in, in));
  EXPECT_FALSE(verdicts_agree(in, out));
  EXPECT_TRUE(verdicts_agree(in, border));
  EXPECT_TRUE(verdicts_agree(border, out));
  MembershipVerdict edge = in;
  edge.margin = 0.0;
  EXPECT_TRUE(verdicts_agree(edge, out));
}

// Invariant: In at ρ implies In at every larger ρ.
TEST(MembershipProperty, MonotoneInRho) {
  const std::vector<double> grid{0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Gen g(seed);
    const Index d = 2 + Index(seed % 4);
    const Matrix a = g.matrix(d) * (g.uniform(0.3, 1.2) / std::sqrt(double(d)));
    bool seen_in = false;
    double prev_margin = -1.0;
    for (double rho : grid) {
      MembershipOptions opt;
      opt.cross_check = false;
      const MembershipVerdict v = membership_single(a, rho, opt);
      if (seen_in) {
        EXPECT_NE(v.decision, Decision::Out) << "seed " << seed << " rho " << rho;
        EXPECT_GE(v.margin, -1e-8) << "seed " << seed << " prev " << prev_margin;
      }
      if (v.decision == Decision::In) seen_in = true;
      prev_margin = v.margin;
    }
  }
}
