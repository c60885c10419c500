#include "rho/radii.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "grid_search.hpp"
#include "internal.hpp"
#include "parallel.hpp"

namespace rho {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_rho(double rho, const char* what) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw InputError(std::string(what) + ": rho must be positive");
  }
}

void require_width(double width, const char* what) {
  if (!(width > 0.0)) throw InputError(std::string(what) + ": width must be positive");
}

double upper_factor(double rho) { return std::max(1.0, 2.0 / rho - 1.0); }

// Bisection on u for a predicate that is false below the radius and true above it.
// `lo` must be false (or equal to the radius) and `hi` true.
template <typename Pred>
int bisect(double& lo, double& hi, double width, Pred&& in_class) {
  int it = 0;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (in_class(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++it;
  }
  return it;
}

void add_disk_parameters(std::map<std::string, double>& p, const MembershipOptions& m) {
  p["tol"] = m.tol;
  p["theta_points"] = m.disk.theta_points;
  p["refine_candidates"] = m.disk.refine_candidates;
  p["interior_r_points"] = m.disk.interior_r_points;
}

std::vector<Point> scalar_torus_points(Index n_vars, int total) {
  const int per_axis =
      std::max(1, int(std::floor(std::pow(double(std::max(total, 1)), 1.0 / double(n_vars)) +
                                 1e-9)));
  return torus_grid(n_vars, per_axis, 1.0);
}

// A ⊗ C for every sampled C, preceded by the scalar torus points ζA.
std::vector<Matrix> tensor_candidates(const OperatorTuple& a, int budget, std::uint64_t seed,
                                      double norm_cap, int torus_points) {
  std::vector<Matrix> out;
  for (const Point& z : scalar_torus_points(a.n_vars(), torus_points)) {
    out.push_back(eval_pencil(a, z));
  }
  for (const auto& c : sample_commuting_tuples(a.n_vars(), budget, seed, norm_cap)) {
    out.push_back(tensor_pencil(a, c.base));
  }
  return out;
}

}  // namespace

RadiusReport w_rho(const Matrix& a, double rho, double width) {
  RadiusOptions opt;
  opt.width = width;
  return w_rho(a, rho, opt);
}

RadiusReport w_rho(const Matrix& a, double rho, const RadiusOptions& opt) {
  const auto t0 = Clock::now();
  require_square(a, "w_rho");
  require_finite(a, "w_rho");
  require_rho(rho, "w_rho");
  require_width(opt.width, "w_rho");

  RadiusReport rep;
  rep.method = "bisection";
  rep.parameters = {{"rho", rho}, {"width", opt.width}};
  add_disk_parameters(rep.parameters, opt.membership);

  const double norm = op_norm(a);
  if (norm == 0.0 || a.rows() == 0) {
    rep.method = "zero";
    rep.wall_time_s = seconds_since(t0);
    return rep;
  }
  const double nu = spectral_radius(a);
  double lo = std::max(nu, norm / rho);
  double hi = norm * upper_factor(rho);
  if (lo > hi) {
    if (lo - hi > 1e-12 * hi) {
      std::ostringstream os;
      os.precision(17);
      os << "w_rho: inverted initial bracket lo = " << lo << " > hi = " << hi
         << " (spectral radius " << nu << ", norm " << norm << ", rho " << rho << ")";
      throw InternalError(os.str());
    }
    lo = hi;
  }
  rep.parameters["initial_lo"] = lo;
  rep.parameters["initial_hi"] = hi;

  const DiskGrid& grid = opt.membership.disk;
  const double tol = opt.membership.tol;
  // Every u > lo ≥ ν(A) gives ν(A/u) < 1, where the circle decides the whole disk.
  auto in_class = [&](double u) {
    return kernel_boundary_route(a / u, rho, grid).margin >= -tol;
  };

  // At u = lo the circle only suffices when lo exceeds ν(A).
  const bool lo_in = nu < lo * (1.0 - 1e-12) ? in_class(lo)
                                              : kernel_route(a / lo, rho, grid).margin >= -tol;
  if (lo_in) {
    hi = lo;
  } else {
    if (!in_class(hi)) {
      std::ostringstream os;
      os.precision(17);
      os << "w_rho: upper bracket end u = " << hi << " fails the membership test (rho " << rho
         << ", norm " << norm << ")";
      throw InternalError(os.str());
    }
    rep.iterations = bisect(lo, hi, opt.width, in_class);
  }
  rep.lo = lo;
  rep.hi = hi;
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

double numerical_radius(const Matrix& a, const DiskGrid& grid) {
  require_square(a, "numerical_radius");
  require_finite(a, "numerical_radius");
  if (a.rows() == 0) return 0.0;
  if (a.rows() == 1) return std::abs(a(0, 0));
  auto f = [&](double th) {
    const Matrix t = std::polar(1.0, th) * a;
    return detail::lambda_min(-(t + t.adjoint()) / 2.0);
  };
  return -detail::periodic_min(f, grid.theta_points, grid.refine_candidates).value;
}

RadiusReport w_rho_tuple(const OperatorTuple& a, double rho, const RadiusOptions& opt) {
  const auto t0 = Clock::now();
  require_rho(rho, "w_rho_tuple");
  require_width(opt.width, "w_rho_tuple");
  if (a.n_vars() == 1) {
    RadiusReport r = w_rho(a[0], rho, opt);
    r.parameters["n_vars"] = 1;
    return r;
  }

  const MembershipOptions& m = opt.membership;
  RadiusReport rep;
  rep.method = "tuple-bisection";
  rep.parameters = {{"rho", rho},
                    {"width", opt.width},
                    {"n_vars", double(a.n_vars())},
                    {"budget", double(m.budget)},
                    {"seed", double(m.seed)},
                    {"norm_cap", m.norm_cap},
                    {"torus_points", double(opt.torus_points)}};
  add_disk_parameters(rep.parameters, m);
  for (std::size_t i = 0; i < m.polydisk.radii.size(); ++i) {
    rep.parameters["polydisk_radius_" + std::to_string(i)] = m.polydisk.radii[i];
  }
  rep.parameters[a.n_vars() == 2 ? "polydisk_theta_per_axis" : "polydisk_total_points"] =
      a.n_vars() == 2 ? m.polydisk.theta_points : m.polydisk.total_points;

  const double norm_sum = a.norm_sum();
  if (norm_sum == 0.0) {
    rep.method = "zero";
    rep.wall_time_s = seconds_since(t0);
    return rep;
  }

  // Lower bound: sup of w_ρ(A ⊗ C) over the candidates.
  const auto cands = tensor_candidates(a, m.budget, m.seed, m.norm_cap, opt.torus_points);
  std::vector<double> lows(cands.size(), 0.0);
  RadiusOptions sub = opt;
  detail::parallel_for(cands.size(), [&](std::size_t i) { lows[i] = w_rho(cands[i], rho, sub).lo; });
  double lo = 0.0;
  for (double v : lows) lo = std::max(lo, v);
  rep.parameters["sampled_lower_bound"] = lo;

  double hi = norm_sum * upper_factor(rho);
  lo = std::min(lo, hi);
  auto in_class = [&](double u) {
    return membership_tuple(a.scaled(cplx(1.0 / u, 0.0)), rho, m).decision == Decision::In;
  };
  if (lo > 0.0 && in_class(lo)) {
    hi = lo;
  } else {
    rep.iterations = bisect(lo, hi, opt.width, in_class);
  }
  rep.lo = lo;
  rep.hi = hi;
  rep.hi_exactness = a.n_vars() >= 3 ? Exactness::NecessaryOnly : Exactness::Certified;
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

double tuple_numerical_radius(const OperatorTuple& a, int budget, std::uint64_t seed,
                              int torus_points) {
  const auto cands = tensor_candidates(a, budget, seed, kDefaultNormCap, torus_points);
  std::vector<double> vals(cands.size(), 0.0);
  detail::parallel_for(cands.size(), [&](std::size_t i) { vals[i] = numerical_radius(cands[i]); });
  double best = 0.0;
  for (double v : vals) best = std::max(best, v);
  return best;
}

double tuple_spectral_radius(const OperatorTuple& a, int n_max, int budget, std::uint64_t seed,
                             int torus_points) {
  if (n_max < 8) throw InputError("tuple_spectral_radius: n_max must be >= 8");
  const auto cands = tensor_candidates(a, budget, seed, kDefaultNormCap, torus_points);
  std::vector<double> vals(cands.size(), 0.0);
  detail::parallel_for(cands.size(), [&](std::size_t i) {
    vals[i] = spectral_radius_power_limit(cands[i], n_max);
  });
  double best = 0.0;
  for (double v : vals) best = std::max(best, v);
  return best;
}

}  // namespace rho
