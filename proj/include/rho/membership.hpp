#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rho/pencil.hpp"
#include "rho/sampling.hpp"

namespace rho {

enum class Decision { In, Out, Borderline };
enum class Exactness { Certified, NecessaryOnly };

const char* to_string(Decision d) noexcept;
const char* to_string(Exactness e) noexcept;

/// Grid used by the single-operator tests on the closed unit disk.
struct DiskGrid {
  int theta_points = 512;
  int refine_candidates = 3;  ///< grid local minima refined by golden section
  int interior_r_points = 64;  ///< interior radii, only used when ρ > 2
  double psi_radius = 1.0 - 1e-6;
};

/// Grid and sampling parameters of the tuple tests.
struct PolydiskGrid {
  std::vector<double> radii{0.9, 0.99, 1.0 - 1e-4};
  int theta_points = 128;  ///< per axis, N = 2
  int total_points = 4096;  ///< angular points per radius when N ≥ 3
  int refine_candidates = 3;
  int refine_rounds = 3;
};

struct MembershipOptions {
  double tol = 1e-9;
  bool cross_check = true;  ///< also run the ψ test and flag disagreement as Borderline
  DiskGrid disk;
  PolydiskGrid polydisk;
  int budget = kDefaultSampleBudget;
  std::uint64_t seed = 0;
  double norm_cap = kDefaultNormCap;
};

/// Outcome of one equivalent positivity test.
///   kernel: min over the closed disk of λ_min(k(z, z))
///   psi:    min over the circle |z| = psi_radius of λ_min(Re ψ(z)), Re X = (X + X*)/2
///   phi:    1 − sup over the circle (N = 1) or polydisk (N ≥ 2) of ‖φ(z)‖
/// Each margin is negative exactly when the test fails.
struct RouteResult {
  std::string route;
  double margin = 0.0;
  Point witness;
  bool pole = false;
  int evaluations = 0;
};

/// Margin reported for a test that ran into a pole (the resolvent norm exceeds 1e12 there).
inline constexpr double kPoleMargin = -1.0 / kPoleThreshold;

Decision route_decision(const RouteResult& r, double tol) noexcept;

RouteResult kernel_route(const Matrix& a, double rho, const DiskGrid& grid = {});
/// Kernel test on the unit circle only. This decides membership whenever ν(A) < 1.
RouteResult kernel_boundary_route(const Matrix& a, double rho, const DiskGrid& grid = {});
RouteResult psi_route(const Matrix& a, double rho, const DiskGrid& grid = {});
RouteResult phi_route(const Matrix& a, double rho, const DiskGrid& grid = {});
/// 1 − sup of ‖φ(z)‖ over the polydisk grid. Any N.
RouteResult phi_polydisk_route(const OperatorTuple& a, double rho, const PolydiskGrid& grid = {});

struct MembershipVerdict {
  Decision decision = Decision::Borderline;
  double margin = 0.0;
  double tol = 1e-9;
  Exactness exactness = Exactness::Certified;
  std::string route;        ///< route that produced `margin`
  Point witness;            ///< point attaining the margin
  std::string certificate;  ///< human-readable account of the witness
  std::vector<RouteResult> routes;
  std::map<std::string, double> parameters;

  bool on_boundary() const noexcept { return margin >= -tol && margin <= tol; }
};

/// A ∈ C_ρ. In iff margin ≥ −tol; Out carries a witness with margin < −tol;
/// Borderline only when the kernel and ψ tests disagree.
MembershipVerdict membership_single(const Matrix& a, double rho,
                                    const MembershipOptions& opt = {});
MembershipVerdict membership_single(const Matrix& a, double rho, double tol);

/// A ∈ C_{ρ,N}. N = 1 delegates, N = 2 decides on the polydisk sup of ‖φ‖,
/// N ≥ 3 adds sampled commuting tuples and reports In as NecessaryOnly.
MembershipVerdict membership_tuple(const OperatorTuple& a, double rho,
                                   const MembershipOptions& opt = {});

/// Three-way agreement with Borderline and |margin| ≤ tol acting as wildcards.
bool verdicts_agree(const MembershipVerdict& a, const MembershipVerdict& b) noexcept;

}  // namespace rho
