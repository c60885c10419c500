#pragma once

// One-dimensional grid + golden-section minimizers shared by the membership and
// radius computations. Internal header.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace rho::detail {

struct Minimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for a local minimum on [a, b].
Minimum golden_section_min(const std::function<double(double)>& f, double a, double b,
                           double x_tol = 1e-10, int max_iter = 80);

/// Minimum of a 2π-periodic function: `n_grid` equispaced angles (starting at 0),
/// followed by golden-section refinement around the `n_refine` best grid local minima.
Minimum periodic_min(const std::function<double(double)>& f, int n_grid, int n_refine);

struct Minimum2 {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Coordinate-wise golden refinement of f(x, y) starting from (x0, y0), with the search
/// window [x0 ± hx] ∩ [x_lo, x_hi] and [y0 ± hy] (y unbounded, e.g. an angle).
Minimum2 coordinate_refine(const std::function<double(double, double)>& f, double x0, double y0,
                           double hx, double hy, double x_lo, double x_hi, int rounds);

/// Coordinate-wise golden refinement over several angles, each searched in [θ_k ± h].
struct MinimumN {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};
MinimumN angles_refine(const std::function<double(const std::vector<double>&)>& f,
                       std::vector<double> x0, double h, int rounds);

}  // namespace rho::detail
