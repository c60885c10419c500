#pragma once

#include <span>
#include <vector>

#include "rho/tuple.hpp"

namespace rho {

using Point = std::vector<cplx>;

/// Smallest singular value of a resolvent argument below which it is treated as a pole.
inline constexpr double kPoleThreshold = 1e-12;

/// zA = z_1 A_1 + ... + z_N A_N
Matrix eval_pencil(const OperatorTuple& a, std::span<const cplx> z);

/// A ⊗ C = Σ_k A_k ⊗ C_k
Matrix tensor_pencil(const OperatorTuple& a, const OperatorTuple& c);

/// Symmetrized multipower (t!/|t|!) Σ over the distinct words with letter counts t.
/// Words are enumerated as multiset permutations, so each arrangement appears once.
Matrix sym_multipower(const OperatorTuple& a, const MultiIndex& t,
                      int max_order = MultiIndex::kDefaultMaxOrder);

/// A_1^{t_1} ... A_N^{t_N}
Matrix plain_multipower(const OperatorTuple& a, const MultiIndex& t);

// The pencil-level forms below take T = zA (and S = wA) directly. They also serve
// A ⊗ C, whose kernel/ψ/φ values at the scalar point 1 are the tuple-calculus values at C.

/// ρI − (ρ−1)(T + S*) + (ρ−2) S* T
Matrix kernel_from_pencil(const Matrix& t, const Matrix& s, double rho);
/// (1 − 2/ρ) I + (2/ρ)(I − T)^{-1}
Matrix psi_from_pencil(const Matrix& t, double rho, const Point& where = {});
/// T ((ρ−1) T − ρ I)^{-1}
Matrix phi_from_pencil(const Matrix& t, double rho, const Point& where = {});

Matrix k_rho_kernel(const OperatorTuple& a, double rho, std::span<const cplx> z,
                    std::span<const cplx> w);
Matrix psi_rho(const OperatorTuple& a, double rho, std::span<const cplx> z);
Matrix phi_rho(const OperatorTuple& a, double rho, std::span<const cplx> z);

/// f(C) = Σ_t f̂_t ⊗ C^t. Mixed monomials require pairwise commuting C (residual ≤ 1e-10).
Matrix eval_on_tuple(const MatrixPolynomial& f, const OperatorTuple& c);

}  // namespace rho
