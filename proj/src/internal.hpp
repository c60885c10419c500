#pragma once

// Helpers shared between translation units of the library. Not installed.

#include <Eigen/Dense>

#include "rho/membership.hpp"

namespace rho::detail {

/// Smallest eigenvalue of (H + H*)/2 without validation. Closed forms for d ≤ 2.
inline double lambda_min(const Matrix& h) {
  const Index d = h.rows();
  if (d == 1) return h(0, 0).real();
  if (d == 2) {
    const double a = h(0, 0).real();
    const double c = h(1, 1).real();
    const cplx b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
    return 0.5 * (a + c) - std::hypot(0.5 * (a - c), std::abs(b));
  }
  return double(hermitian_eigenvalues_unchecked(h).minCoeff());
}

/// Kernel test on the circle plus eigenvalue witnesses, without the interior grid.
RouteResult kernel_fast_route(const Matrix& a, double rho, const DiskGrid& grid);

}  // namespace rho::detail
