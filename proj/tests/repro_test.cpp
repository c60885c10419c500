#include <gtest/gtest.h>

#include "rho/io.hpp"
#include "rho/repro.hpp"
#include "test_support.hpp"

using namespace rho;

namespace {

double observed_number(const ExperimentReport& r, const std::string& prefix) {
  const Claim* c = r.find(prefix);
  if (c == nullptr) throw std::runtime_error("no claim " + prefix);
  return std::get<double>(c->observed);
}

void expect_all_pass(const ExperimentReport& r) {
  for (const Claim& c : r.claims) {
    EXPECT_TRUE(c.pass) << r.name << ": " << c.description;
    EXPECT_TRUE(c.provenance == "literature" || c.provenance == "derived" || c.provenance == "trivial")
        << c.provenance;
  }
  EXPECT_TRUE(r.passed());
}

Json without_time(const ExperimentReport& r) {
  Json j = to_json(r);
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST(ScalarBoundary, HalfAndQuarter) {
  const ExperimentReport r = repro_scalar_boundary(0.5, 0.25);
  expect_all_pass(r);
  // Kernel at z = −1 for a = 1/3 and ρ' = 1/4, evaluated here from the scalar formula.
  const double a = 1.0 / 3.0, rp = 0.25;
  const double direct = rp - (rp - 1.0) * (-2.0 * a) + (rp - 2.0) * a * a;
  EXPECT_NEAR(direct, -4.0 / 9.0, 1e-15);
  EXPECT_NEAR(observed_number(r, "Out margin"), direct, 1e-8);
}

TEST(ScalarBoundary, OtherParameters) {
  expect_all_pass(repro_scalar_boundary(0.9, 0.1));
  expect_all_pass(repro_scalar_boundary(0.3, 1e-3));
  EXPECT_THROW(repro_scalar_boundary(1.0, 0.1), InputError);
  EXPECT_THROW(repro_scalar_boundary(0.5, 0.5), InputError);
}

TEST(Thm51, AdmissibleEpsMatchesBisection) {
  for (double rho : {1.5, 2.0, 3.0, 10.0}) {
    auto f = [rho](double e) { return (1 + e) / rho + (rho - 1) * std::pow((1 + e) / rho, 2) - 1; };
    double lo = 0.0, hi = rho;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0 ? hi : lo) = mid;
    }
    EXPECT_NEAR(thm51_admissible_eps(rho), lo, 1e-12) << rho;
  }
  EXPECT_NEAR(thm51_admissible_eps(2.0), std::sqrt(5.0) - 2.0, 1e-14);
  EXPECT_THROW(thm51_admissible_eps(1.0), InputError);
}

TEST(Thm51, ProductMatchesDisplay) {
  const double eps = 0.1;
  const double s = (1 + eps) * (1 + eps);
  Matrix expected = Matrix::Zero(3, 3);
  expected(0, 0) = -s;
  expected(1, 1) = expected(2, 2) = s / 2;
  expected(1, 2) = expected(2, 1) = -s / 2;
  const OperatorTuple a = build_thm51_pair(eps);
  EXPECT_LT(rho_test::max_abs(thm51_product(eps) - expected), 1e-14);
  EXPECT_LT(rho_test::max_abs((a[0] + a[1]) * (a[0] - a[1]) - expected), 1e-14);
}

TEST(Thm51, PassesAcrossRho) {
  for (double rho : {1.5, 2.0, 3.0}) {
    const ExperimentReport r = repro_thm51(rho);
    expect_all_pass(r);
    EXPECT_NEAR(std::get<double>(r.parameters.at("eps")), thm51_admissible_eps(rho) / 2, 1e-15);
  }
  const ExperimentReport r = repro_thm51(2.0, 0.1);
  expect_all_pass(r);
  EXPECT_LE(observed_number(r, "sup ||phi(z)|| over the polydisk grid at eps = 0"), 0.75 + 1e-9);
  EXPECT_THROW(repro_thm51(2.0, 0.3), InputError);
}

TEST(Thm53, PassesAcrossRho) {
  for (double rho : {1.0, 1.5, 2.0, 3.0}) expect_all_pass(repro_thm53(rho));
  const ExperimentReport r = repro_thm53(1.0);
  EXPECT_LE(observed_number(r, "| ||zeta A|| - sqrt(2) rho |"), 1e-9);
}

TEST(VonNeumann, SmallRuns) {
  for (double rho : {0.5, 1.0, 2.0}) {
    const ExperimentReport r = repro_von_neumann(rho, 12, 3);
    expect_all_pass(r);
  }
  EXPECT_THROW(repro_von_neumann(1.0, 0), InputError);
}

TEST(PropertySuite, TwoSeeds) {
  PropertySuiteOptions opt;
  opt.seeds = {11, 12};
  opt.tuple_cases = 1;
  expect_all_pass(radius_property_suite(opt));
  EXPECT_THROW(radius_property_suite(PropertySuiteOptions{}), InputError);
}

TEST(Monotonicity, DefaultGridAndValidation) {
  const ExperimentReport r = repro_class_monotonicity(2, {0.3, 0.5, 0.7, 1.0, 2.0, 4.0}, 1, 4);
  expect_all_pass(r);
  expect_all_pass(repro_class_monotonicity(1, {1.0, 2.0, 4.0}, 2, 6));
  EXPECT_THROW(repro_class_monotonicity(2, {1.0, 0.5}), InputError);
  EXPECT_THROW(repro_class_monotonicity(2, {}), InputError);
}

TEST(ReproDeterminism, IdenticalReportsForIdenticalSeeds) {
  EXPECT_EQ(without_time(repro_von_neumann(1.0, 8, 7)), without_time(repro_von_neumann(1.0, 8, 7)));
  EXPECT_EQ(without_time(repro_class_monotonicity(2, {0.5, 1.0, 2.0}, 3, 3)),
            without_time(repro_class_monotonicity(2, {0.5, 1.0, 2.0}, 3, 3)));
  EXPECT_EQ(without_time(repro_thm51(2.0)), without_time(repro_thm51(2.0)));
}
