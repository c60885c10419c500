#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rho/dilation.hpp"
#include "rho/radii.hpp"

namespace rho {

using ReportValue = std::variant<double, std::string>;

/// Origin of a checked value: "literature" (stated in the source theory), "derived"
/// (computed by an independent route), "trivial" (immediate from definitions).
struct Claim {
  std::string description;
  ReportValue expected;
  ReportValue observed;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance;
};

struct ExperimentReport {
  std::string name;
  std::map<std::string, ReportValue> parameters;
  std::vector<Claim> claims;
  double wall_time_s = 0.0;

  bool passed() const noexcept;
  const Claim* find(const std::string& description_prefix) const noexcept;
};

/// a = ρ/(2−ρ) lies in C_ρ but not in C_{ρ−ε}; the Out margin is −4ε/(2−ρ)².
ExperimentReport repro_scalar_boundary(double rho, double eps);

/// Largest ε with (1+ε)/ρ + (ρ−1)((1+ε)/ρ)² ≤ 1.
double thm51_admissible_eps(double rho);
/// The nilpotent 3×3 pair with entries ±(1+ε)/√2.
OperatorTuple build_thm51_pair(double eps);
/// (A_1 + A_2)(A_1 − A_2)
Matrix thm51_product(double eps);

/// Defaults to ε = thm51_admissible_eps(ρ)/2.
ExperimentReport repro_thm51(double rho, std::optional<double> eps = std::nullopt);

/// Truncations M = 16, depth = 5.
ExperimentReport repro_thm53(double rho);

ExperimentReport repro_von_neumann(double rho, int trials, std::uint64_t seed = 0);

struct PropertySuiteOptions {
  std::vector<std::uint64_t> seeds;  ///< one random case per seed
  std::vector<int> dims{2, 3, 4};    ///< dimension used for seed i is dims[i % size]
  std::vector<double> rhos{0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
  double width = 1e-6;
  int power_samples = 4;    ///< commuting tuples per case in the power-bound check
  int tuple_cases = 3;      ///< seeds that also run the two-variable reductions
};
ExperimentReport radius_property_suite(const PropertySuiteOptions& opt);

ExperimentReport repro_class_monotonicity(int n_vars, const std::vector<double>& rho_grid,
                                          std::uint64_t seed = 0, int cases = 10);

}  // namespace rho
