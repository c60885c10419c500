#pragma once

#include <map>
#include <string>

#include "rho/membership.hpp"

namespace rho {

struct RadiusOptions {
  double width = 1e-6;  ///< requested bracket width hi − lo
  MembershipOptions membership;
  int torus_points = 64;  ///< scalar points ζ ∈ T^N used in tuple lower bounds
};

/// Bracket [lo, hi] around a radius, with the parameters that produced it.
struct RadiusReport {
  double lo = 0.0;
  double hi = 0.0;
  std::string method;
  std::map<std::string, double> parameters;
  double wall_time_s = 0.0;
  Exactness lo_exactness = Exactness::Certified;
  Exactness hi_exactness = Exactness::Certified;
  int iterations = 0;

  double value() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
};

/// w_ρ(A) = inf{u > 0 : A/u ∈ C_ρ} by bisection on u.
RadiusReport w_rho(const Matrix& a, double rho, const RadiusOptions& opt);
RadiusReport w_rho(const Matrix& a, double rho, double width = 1e-6);

/// w(A) = max_θ λ_max(Re(e^{iθ} A)).
double numerical_radius(const Matrix& a, const DiskGrid& grid = {});

/// w_{ρ,N}(A). lo: sup of w_ρ(A ⊗ C) over sampled C and scalar torus points.
/// hi: bisection over membership_tuple, flagged NecessaryOnly when N ≥ 3.
RadiusReport w_rho_tuple(const OperatorTuple& a, double rho, const RadiusOptions& opt = {});

/// Lower bound for w^{(N)}(A) = sup_C w(A ⊗ C).
double tuple_numerical_radius(const OperatorTuple& a, int budget = kDefaultSampleBudget,
                              std::uint64_t seed = 0, int torus_points = 64);

/// max over sampled C of ‖(A ⊗ C)^{n_max}‖^{1/n_max}.
double tuple_spectral_radius(const OperatorTuple& a, int n_max = 32,
                             int budget = kDefaultSampleBudget, std::uint64_t seed = 0,
                             int torus_points = 64);

}  // namespace rho
