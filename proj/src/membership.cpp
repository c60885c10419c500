#include "rho/membership.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "grid_search.hpp"
#include "internal.hpp"

namespace rho {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string describe_point(const Point& z) {
  std::ostringstream os;
  os.precision(12);
  os << "(";
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (k) os << ", ";
    os << "r=" << std::abs(z[k]) << " theta=" << std::arg(z[k]);
  }
  os << ")";
  return os.str();
}

void require_rho(double rho, const char* what) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InputError(std::string(what) + ": rho must be positive");
}

void require_operator(const Matrix& a, const char* what) {
  require_square(a, what);
  require_finite(a, what);
  if (a.rows() == 0) throw InputError(std::string(what) + ": empty matrix");
}

// λ_min of k(z, z) for z = r e^{iθ}, with G = A*A precomputed.
struct KernelOnDisk {
  const Matrix& a;
  Matrix g;
  double rho;

  KernelOnDisk(const Matrix& a_, double rho_) : a(a_), g(a_.adjoint() * a_), rho(rho_) {}

  double operator()(double r, double theta) const {
    const cplx e = std::polar(r, theta);
    Matrix t = e * a;
    Matrix k = (rho - 1.0) * -(t + t.adjoint());
    k += (rho - 2.0) * r * r * g;
    k.diagonal().array() += rho;
    return detail::lambda_min(k);
  }
};

// Eigenvalue witnesses: for |λ| > 1 the point z = s/λ makes ⟨k x, x⟩ = (s−1)((ρ−2)s − ρ) < 0
// along the eigenvector x.
void spectral_witness(const Matrix& a, double rho, const KernelOnDisk& kern, RouteResult& out) {
  Eigen::ComplexEigenSolver<Matrix> es(a, false);
  if (es.info() != Eigen::Success) throw EvaluationError("kernel test: eigensolver failed");
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx lam = es.eigenvalues()(i);
    const double mod = std::abs(lam);
    if (!(mod > 1.0)) continue;
    const double s = rho <= 2.0 ? mod : std::min(mod, (rho - 1.0) / (rho - 2.0));
    const cplx z = s / lam;
    const double v = kern(std::abs(z), std::arg(z));
    ++out.evaluations;
    if (v < out.margin) {
      out.margin = v;
      out.witness = {z};
    }
  }
}

RouteResult boundary_part(const DiskGrid& grid, const KernelOnDisk& kern) {
  const auto m = detail::periodic_min([&](double th) { return kern(1.0, th); }, grid.theta_points,
                                      grid.refine_candidates);
  return RouteResult{"kernel", m.value, {std::polar(1.0, m.x)}, false, m.evaluations};
}

}  // namespace

const char* to_string(Decision d) noexcept {
  switch (d) {
    case Decision::In:
      return "In";
    case Decision::Out:
      return "Out";
    case Decision::Borderline:
      return "Borderline";
  }
  return "unknown";
}

const char* to_string(Exactness e) noexcept {
  return e == Exactness::Certified ? "Certified" : "NecessaryOnly";
}

Decision route_decision(const RouteResult& r, double tol) noexcept {
  return r.margin >= -tol ? Decision::In : Decision::Out;
}

RouteResult kernel_boundary_route(const Matrix& a, double rho, const DiskGrid& grid) {
  require_operator(a, "kernel_boundary_route");
  require_rho(rho, "kernel_boundary_route");
  const KernelOnDisk kern(a, rho);
  return boundary_part(grid, kern);
}

namespace detail {

// Boundary plus eigenvalue witnesses; equivalent to the full disk test except when ν(A) = 1.
RouteResult kernel_fast_route(const Matrix& a, double rho, const DiskGrid& grid) {
  const KernelOnDisk kern(a, rho);
  RouteResult out = boundary_part(grid, kern);
  spectral_witness(a, rho, kern, out);
  return out;
}

}  // namespace detail

RouteResult kernel_route(const Matrix& a, double rho, const DiskGrid& grid) {
  require_operator(a, "kernel_route");
  require_rho(rho, "kernel_route");
  const KernelOnDisk kern(a, rho);
  RouteResult out = boundary_part(grid, kern);

  if (rho > 2.0 && grid.interior_r_points > 1) {
    // Per direction the kernel is convex in r here, so the minimum may be interior.
    const int nr = grid.interior_r_points;
    const int nt = grid.theta_points;
    double best = out.margin;
    double br = -1.0;
    double bt = 0.0;
    for (int i = 1; i < nr; ++i) {
      const double r = double(i) / nr;
      for (int j = 0; j < nt; ++j) {
        const double th = kTwoPi * j / nt;
        const double v = kern(r, th);
        if (v < best) {
          best = v;
          br = r;
          bt = th;
        }
      }
    }
    out.evaluations += (nr - 1) * nt;
    if (br >= 0.0) {
      const auto m = detail::coordinate_refine([&](double r, double th) { return kern(r, th); },
                                               br, bt, 1.0 / nr, kTwoPi / nt, 0.0, 1.0, 1);
      out.evaluations += m.evaluations;
      out.margin = m.value;
      out.witness = {std::polar(m.x, m.y)};
    }
  }
  spectral_witness(a, rho, kern, out);
  return out;
}

RouteResult psi_route(const Matrix& a, double rho, const DiskGrid& grid) {
  require_operator(a, "psi_route");
  require_rho(rho, "psi_route");
  const double r = grid.psi_radius;
  bool pole = false;
  Point pole_at;
  auto f = [&](double th) {
    const Point z{std::polar(r, th)};
    try {
      return detail::lambda_min(hermitian_part(psi_from_pencil(z[0] * a, rho, z)));
    } catch (const PoleError&) {
      if (!pole) pole_at = z;
      pole = true;
      return kPoleMargin;
    }
  };
  const auto m = detail::periodic_min(f, grid.theta_points, grid.refine_candidates);
  if (pole) return RouteResult{"psi", kPoleMargin, pole_at, true, m.evaluations};
  return RouteResult{"psi", m.value, {std::polar(r, m.x)}, false, m.evaluations};
}

RouteResult phi_route(const Matrix& a, double rho, const DiskGrid& grid) {
  require_operator(a, "phi_route");
  require_rho(rho, "phi_route");
  bool pole = false;
  Point pole_at;
  auto f = [&](double th) {
    const Point z{std::polar(1.0, th)};
    try {
      return -detail::op_norm_unchecked(phi_from_pencil(z[0] * a, rho, z));
    } catch (const PoleError&) {
      if (!pole) pole_at = z;
      pole = true;
      return kPoleMargin - 1.0;
    }
  };
  const auto m = detail::periodic_min(f, grid.theta_points, grid.refine_candidates);
  if (pole) return RouteResult{"phi", kPoleMargin, pole_at, true, m.evaluations};
  return RouteResult{"phi", 1.0 + m.value, {std::polar(1.0, m.x)}, false, m.evaluations};
}

RouteResult phi_polydisk_route(const OperatorTuple& a, double rho, const PolydiskGrid& grid) {
  require_rho(rho, "phi_polydisk_route");
  if (grid.radii.empty()) throw InputError("phi_polydisk_route: no radii");
  const Index n = a.n_vars();
  const int per_axis =
      n == 2 ? grid.theta_points
             : std::max(2, int(std::floor(std::pow(double(grid.total_points), 1.0 / double(n)) +
                                          1e-9)));

  bool pole = false;
  Point pole_at;
  int evals = 0;
  // Returns −‖φ(z)‖ so that everything below minimizes.
  auto f = [&](double r, const std::vector<double>& th) {
    Point z(th.size());
    for (std::size_t k = 0; k < th.size(); ++k) z[k] = std::polar(r, th[k]);
    ++evals;
    try {
      return -detail::op_norm_unchecked(phi_from_pencil(eval_pencil(a, z), rho, z));
    } catch (const PoleError&) {
      if (!pole) pole_at = z;
      pole = true;
      return kPoleMargin - 1.0;
    }
  };

  struct Cand {
    double value;
    double r;
    std::vector<double> th;
  };
  std::vector<Cand> best;
  const std::size_t keep = std::size_t(std::max(1, grid.refine_candidates));
  std::vector<int> idx(std::size_t(n), 0);
  for (double r : grid.radii) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<double> th(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < th.size(); ++k) th[k] = kTwoPi * idx[k] / per_axis;
      const double v = f(r, th);
      if (best.size() < keep || v < best.back().value) {
        Cand c{v, r, th};
        auto pos = std::upper_bound(best.begin(), best.end(), c,
                                    [](const Cand& x, const Cand& y) { return x.value < y.value; });
        best.insert(pos, std::move(c));
        if (best.size() > keep) best.pop_back();
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == per_axis) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    if (pole) break;
  }

  Cand top = best.front();
  if (!pole) {
    for (const Cand& c : best) {
      const double r = c.r;
      const auto m = detail::angles_refine([&](const std::vector<double>& th) { return f(r, th); },
                                           c.th, kTwoPi / per_axis, grid.refine_rounds);
      if (m.value < top.value) top = Cand{m.value, r, m.x};
    }
  }
  if (pole) return RouteResult{"phi-polydisk", kPoleMargin, pole_at, true, evals};
  Point z(top.th.size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = std::polar(top.r, top.th[k]);
  return RouteResult{"phi-polydisk", 1.0 + top.value, z, false, evals};
}

MembershipVerdict membership_single(const Matrix& a, double rho, double tol) {
  MembershipOptions opt;
  opt.tol = tol;
  return membership_single(a, rho, opt);
}

MembershipVerdict membership_single(const Matrix& a, double rho, const MembershipOptions& opt) {
  require_operator(a, "membership_single");
  require_rho(rho, "membership_single");
  if (!(opt.tol > 0.0)) throw InputError("membership_single: tol must be positive");

  MembershipVerdict v;
  v.tol = opt.tol;
  v.parameters = {{"rho", rho},
                  {"tol", opt.tol},
                  {"theta_points", double(opt.disk.theta_points)},
                  {"refine_candidates", double(opt.disk.refine_candidates)},
                  {"interior_r_points", rho > 2.0 ? double(opt.disk.interior_r_points) : 0.0},
                  {"psi_radius", opt.cross_check ? opt.disk.psi_radius : 0.0}};

  const RouteResult k = kernel_route(a, rho, opt.disk);
  v.routes.push_back(k);
  v.margin = k.margin;
  v.witness = k.witness;
  v.route = k.route;
  v.decision = route_decision(k, opt.tol);

  if (opt.cross_check) {
    const RouteResult p = psi_route(a, rho, opt.disk);
    v.routes.push_back(p);
    if (p.pole && v.decision != Decision::Out) {
      throw EvaluationError("membership_single: resolvent pole at " + describe_point(p.witness) +
                            " inside the test radius while the kernel test passes");
    }
    if (route_decision(p, opt.tol) != v.decision) v.decision = Decision::Borderline;
  }

  std::ostringstream cert;
  cert << "kernel lambda_min = " << fmt(v.margin) << " at z = " << describe_point(v.witness);
  if (opt.cross_check) cert << "; psi lambda_min = " << fmt(v.routes.back().margin);
  v.certificate = cert.str();
  return v;
}

MembershipVerdict membership_tuple(const OperatorTuple& a, double rho,
                                   const MembershipOptions& opt) {
  require_rho(rho, "membership_tuple");
  if (a.n_vars() == 1) return membership_single(a[0], rho, opt);
  if (!(opt.tol > 0.0)) throw InputError("membership_tuple: tol must be positive");

  MembershipVerdict v;
  v.tol = opt.tol;
  v.parameters = {{"rho", rho},
                  {"tol", opt.tol},
                  {"n_vars", double(a.n_vars())},
                  {"polydisk_refine_candidates", double(opt.polydisk.refine_candidates)},
                  {"polydisk_refine_rounds", double(opt.polydisk.refine_rounds)}};
  for (std::size_t i = 0; i < opt.polydisk.radii.size(); ++i) {
    v.parameters["polydisk_radius_" + std::to_string(i)] = opt.polydisk.radii[i];
  }
  if (a.n_vars() == 2) {
    v.parameters["polydisk_theta_per_axis"] = opt.polydisk.theta_points;
  } else {
    v.parameters["polydisk_total_points"] = opt.polydisk.total_points;
  }

  const RouteResult p = phi_polydisk_route(a, rho, opt.polydisk);
  v.routes.push_back(p);
  v.margin = p.margin;
  v.witness = p.witness;
  v.route = p.route;
  std::ostringstream cert;
  if (p.pole) {
    cert << "phi pole at z = " << describe_point(p.witness);
  } else {
    cert << "sup ||phi|| = " << fmt(1.0 - p.margin) << " at z = " << describe_point(p.witness);
  }

  if (a.n_vars() >= 3) {
    v.parameters["budget"] = opt.budget;
    v.parameters["seed"] = double(opt.seed);
    v.parameters["norm_cap"] = opt.norm_cap;
    v.parameters["theta_points"] = opt.disk.theta_points;
    const auto samples = sample_commuting_tuples(a.n_vars(), opt.budget, opt.seed, opt.norm_cap);
    RouteResult worst{"tensor-samples", std::numeric_limits<double>::infinity(), {}, false, 0};
    std::size_t worst_i = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Matrix t = tensor_pencil(a, samples[i].base);
      const RouteResult r = detail::kernel_fast_route(t, rho, opt.disk);
      worst.evaluations += r.evaluations;
      if (r.margin < worst.margin) {
        worst.margin = r.margin;
        worst.witness = r.witness;
        worst_i = i;
      }
    }
    if (!samples.empty()) {
      v.routes.push_back(worst);
      cert << "; worst sampled A(x)C kernel lambda_min = " << fmt(worst.margin) << " (sample "
           << worst_i << ", " << to_string(samples[worst_i].family) << ", dim "
           << samples[worst_i].base.dim() << ")";
      if (worst.margin < v.margin) {
        v.margin = worst.margin;
        v.witness = worst.witness;
        v.route = worst.route;
      }
    }
  }

  v.decision = v.margin >= -opt.tol ? Decision::In : Decision::Out;
  v.exactness = (v.decision == Decision::In && a.n_vars() >= 3) ? Exactness::NecessaryOnly
                                                                 : Exactness::Certified;
  v.certificate = cert.str();
  return v;
}

bool verdicts_agree(const MembershipVerdict& a, const MembershipVerdict& b) noexcept {
  if (a.decision == Decision::Borderline || b.decision == Decision::Borderline) return true;
  if (a.on_boundary() || b.on_boundary()) return true;
  return a.decision == b.decision;
}

}  // namespace rho
