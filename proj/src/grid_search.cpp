#include "grid_search.hpp"

#include <numeric>

namespace rho::detail {

Minimum golden_section_min(const std::function<double(double)>& f, double a, double b,
                           double x_tol, int max_iter) {
  constexpr double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return fc <= fd ? Minimum{c, fc, evals} : Minimum{d, fd, evals};
}

Minimum periodic_min(const std::function<double(double)>& f, int n_grid, int n_refine) {
  const double h = 2.0 * std::numbers::pi / n_grid;
  std::vector<double> vals(static_cast<std::size_t>(n_grid));
  for (int j = 0; j < n_grid; ++j) vals[std::size_t(j)] = f(j * h);

  std::vector<int> candidates;
  for (int j = 0; j < n_grid; ++j) {
    const double v = vals[std::size_t(j)];
    const double prev = vals[std::size_t((j + n_grid - 1) % n_grid)];
    const double next = vals[std::size_t((j + 1) % n_grid)];
    if (v <= prev && v <= next) candidates.push_back(j);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return vals[std::size_t(a)] < vals[std::size_t(b)]; });
  if (static_cast<int>(candidates.size()) > n_refine) candidates.resize(std::size_t(n_refine));

  Minimum best{0.0, vals[0], n_grid};
  for (int j = 0; j < n_grid; ++j) {
    if (vals[std::size_t(j)] < best.value) best = Minimum{j * h, vals[std::size_t(j)], n_grid};
  }
  int evals = n_grid;
  for (int j : candidates) {
    const Minimum m = golden_section_min(f, j * h - h, j * h + h);
    evals += m.evaluations;
    if (m.value < best.value) best = m;
  }
  best.evaluations = evals;
  return best;
}

Minimum2 coordinate_refine(const std::function<double(double, double)>& f, double x0, double y0,
                           double hx, double hy, double x_lo, double x_hi, int rounds) {
  Minimum2 cur{x0, y0, f(x0, y0), 1};
  for (int r = 0; r < rounds; ++r) {
    const double y = cur.y;
    const Minimum mx = golden_section_min([&](double x) { return f(x, y); },
                                          std::max(x_lo, cur.x - hx), std::min(x_hi, cur.x + hx));
    cur.evaluations += mx.evaluations;
    if (mx.value < cur.value) {
      cur.x = mx.x;
      cur.value = mx.value;
    }
    const double x = cur.x;
    const Minimum my =
        golden_section_min([&](double yy) { return f(x, yy); }, cur.y - hy, cur.y + hy);
    cur.evaluations += my.evaluations;
    if (my.value < cur.value) {
      cur.y = my.x;
      cur.value = my.value;
    }
  }
  return cur;
}

MinimumN angles_refine(const std::function<double(const std::vector<double>&)>& f,
                       std::vector<double> x0, double h, int rounds) {
  MinimumN cur{x0, f(x0), 1};
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t k = 0; k < cur.x.size(); ++k) {
      std::vector<double> probe = cur.x;
      const Minimum m = golden_section_min(
          [&](double t) {
            probe[k] = t;
            return f(probe);
          },
          cur.x[k] - h, cur.x[k] + h);
      cur.evaluations += m.evaluations;
      if (m.value < cur.value) {
        cur.x[k] = m.x;
        cur.value = m.value;
      }
    }
    h *= 0.5;
  }
  return cur;
}

}  // namespace rho::detail
