#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rho/pencil.hpp"

namespace rho {

enum class CommutingFamily {
  Normal,  ///< C_k = U D_k U* with one random unitary U and random diagonals D_k
  Jordan,  ///< C_k = p_k(J) for one random strictly upper triangular J
};

const char* to_string(CommutingFamily f) noexcept;

/// A tuple of pairwise commuting strict contractions together with its certificate.
struct CommutingTuple {
  OperatorTuple base;
  double commutator_residual;
  double max_norm;
  CommutingFamily family;
  std::uint64_t seed;
};

inline constexpr double kDefaultNormCap = 1.0 - 1e-6;
inline constexpr int kDefaultSampleBudget = 64;

using Rng = std::mt19937_64;

Matrix random_complex_matrix(Index rows, Index cols, Rng& rng);
Matrix random_unitary(Index n, Rng& rng);
/// A complex number uniformly distributed in the closed disk of the given radius.
cplx random_in_disk(Rng& rng, double radius = 1.0);

CommutingTuple sample_commuting_tuple(Index dim, Index n_vars, std::uint64_t seed,
                                      double norm_cap, CommutingFamily family);
/// Family chosen by seed parity (even: normal, odd: Jordan).
CommutingTuple sample_commuting_tuple(Index dim, Index n_vars, std::uint64_t seed,
                                      double norm_cap = kDefaultNormCap);

/// `budget` samples alternating between the two families, dimensions cycling 1..4.
std::vector<CommutingTuple> sample_commuting_tuples(Index n_vars, int budget, std::uint64_t seed,
                                                    double norm_cap = kDefaultNormCap);

/// Regular product grid on the torus T^N with `per_axis` angles per coordinate, scaled by r.
std::vector<Point> torus_grid(Index n_vars, int per_axis, double r = 1.0);

}  // namespace rho
