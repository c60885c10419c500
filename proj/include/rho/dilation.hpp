#pragma once

#include <string>
#include <vector>

#include "rho/pencil.hpp"

namespace rho {

/// Residual below which a compression identity counts as verified.
inline constexpr double kDilationTol = 1e-9;

enum class DilationMode { Symmetrized, Uniform };
const char* to_string(DilationMode m) noexcept;

/// Result of checking A^t = ρ P_X Ã^t |_X (Symmetrized) or, word by word,
/// A_{i1}...A_{in} = ρ P_X Ã_{i1}...Ã_{in} |_X (Uniform).
struct DilationWitness {
  OperatorTuple small;
  OperatorTuple big;
  Embedding embedding;
  double rho = 1.0;
  DilationMode mode = DilationMode::Symmetrized;
  int checked_word_length = 0;
  /// Largest n such that every word or multi-index of length ≤ n passed.
  int verified_word_length = 0;
  double max_residual = 0.0;
  std::vector<double> residual_by_length;  ///< entry n−1: worst residual at length n
  std::string worst;                       ///< word or multi-index attaining max_residual

  bool passed() const noexcept {
    return max_residual < kDilationTol && verified_word_length == checked_word_length;
  }
};

DilationWitness verify_rho_dilation(const OperatorTuple& small, const OperatorTuple& big,
                                    const Embedding& e, double rho, int t_max);

/// All N^n words of each length n ≤ n_max (n_max ≤ 6).
DilationWitness verify_uniform_rho_dilation(const OperatorTuple& small, const OperatorTuple& big,
                                            const Embedding& e, double rho, int n_max);

struct TorusUnitarityCertificate {
  double residual_sum_right = 0.0;  ///< ‖Σ Ã_k Ã_k* − I‖
  double residual_sum_left = 0.0;   ///< ‖Σ Ã_k* Ã_k − I‖
  double cross_residual_left = 0.0;   ///< max_{k≠j} ‖Ã_k* Ã_j‖
  double cross_residual_right = 0.0;  ///< max_{k≠j} ‖Ã_k Ã_j*‖
  bool passed = false;                ///< all four below 1e-10
};

/// ζÃ is unitary for every ζ ∈ T^N iff the Fourier coefficients of (ζÃ)*(ζÃ) and
/// (ζÃ)(ζÃ)* match those of I, which is what this checks.
TorusUnitarityCertificate torus_unitarity(const OperatorTuple& big);

struct PopescuCertificate {
  double isometry_residual = 0.0;    ///< (1): max_k ‖V_k* V_k − I‖
  double orthogonality_residual = 0.0;  ///< (2): max_{k≠j} ‖V_k* V_j‖
  double row_contraction_min_eig = 0.0;  ///< (2'): λ_min(I − Σ V_k V_k*)
  bool isometry = false;
  bool orthogonal_ranges = false;
  bool row_contraction = false;
  bool consistent = false;  ///< (1)&(2) ⟺ (1)&(2')
  bool restricted = false;  ///< (1), (2) evaluated on a subspace
};

/// Popescu conditions (1), (2), (2'). With `domain`, (1) and (2) are evaluated for the
/// restrictions V_k|domain; (2') always uses the whole space.
PopescuCertificate popescu_conditions(const OperatorTuple& v, const Embedding* domain = nullptr);

/// Cyclic shift U on C^M (U e_j = e_{j+1 mod M}) and X = span(e_1, e_0). Then
/// B^n = ρ P_X U^n |_X for 1 ≤ n ≤ M − 2 with B = [[0, ρ], [0, 0]].
struct ShiftDilation {
  OperatorTuple big;
  Embedding embedding;
  int valid_word_length;
};
ShiftDilation build_shift_unitary_rho_dilation(double rho, int m);

/// [[0, ρ], [0, 0]]
Matrix nilpotent_block(double rho);

/// A_1 = [[B, 0], [0, 0]], A_2 = [[0, 0], [B, 0]] with B = nilpotent_block(ρ).
OperatorTuple build_thm53_pair(double rho);

/// Two-letter tree of shift copies truncated to L = 2^{depth−1} summands of C^M:
/// V_1 sends summand j to 2j − 1 and V_2 sends j to 2j through U; X sits in summands 1, 2.
struct PopescuDilation {
  OperatorTuple v;
  Embedding embedding;  ///< X = X_0 ⊕ X_0 inside summands 1 and 2
  Embedding interior;   ///< summands 1..L/2, where both V_k act isometrically
  int valid_word_length;  ///< min(depth − 1, M − 2)
};
PopescuDilation build_thm53_popescu_dilation(double rho, int m, int depth);

struct SimilarityReport {
  double residual = 0.0;  ///< max_k ‖S A_k − B_k S‖
  double sigma_min = 0.0;
  double condition_number = 0.0;  ///< ‖S‖ ‖S^{-1}‖
  bool passed = false;            ///< residual < 1e-9
};

/// Checks A_k = S^{-1} B_k S in the multiplied form S A_k = B_k S.
SimilarityReport verify_similarity(const OperatorTuple& a, const OperatorTuple& b,
                                   const Matrix& s);

enum class Growth { Diverges, Bounded, Inconclusive };
const char* to_string(Growth g) noexcept;

struct DivergenceReport {
  std::vector<double> norms;  ///< ‖M^n‖, n = 1..n_max, capped at 1e300
  double exponent = 0.0;      ///< least-squares slope of log‖M^n‖ over n ∈ [n_max/2, n_max]
  Growth growth = Growth::Inconclusive;
  bool capped = false;
  bool monotone_tail = false;
};

DivergenceReport divergence_probe(const Matrix& m, int n_max = 64);

}  // namespace rho
