#include "rho/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "grid_search.hpp"

namespace rho {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kLiterature = "literature";
constexpr const char* kDerived = "derived";
constexpr const char* kTrivial = "trivial";

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

Claim equal_claim(std::string desc, double expected, double observed, double tol,
                  const char* prov) {
  const bool ok = std::isfinite(observed) && std::abs(observed - expected) <= tol;
  return Claim{std::move(desc), expected, observed, tol, ok, prov};
}

// observed ≥ threshold − tol
Claim at_least_claim(std::string desc, double threshold, double observed, double tol,
                     const char* prov) {
  const bool ok = std::isfinite(observed) && observed >= threshold - tol;
  return Claim{std::move(desc), ">= " + num(threshold), observed, tol, ok, prov};
}

// observed ≤ threshold + tol
Claim at_most_claim(std::string desc, double threshold, double observed, double tol,
                    const char* prov) {
  const bool ok = std::isfinite(observed) && observed <= threshold + tol;
  return Claim{std::move(desc), "<= " + num(threshold), observed, tol, ok, prov};
}

Claim text_claim(std::string desc, const std::string& expected, const std::string& observed,
                 const char* prov) {
  return Claim{std::move(desc), expected, observed, 0.0, expected == observed, prov};
}

Matrix scalar(cplx a) {
  Matrix m(1, 1);
  m(0, 0) = a;
  return m;
}

// Σ c_k A^k by Horner's rule.
Matrix poly_of(const std::vector<cplx>& c, const Matrix& a) {
  const Index d = a.rows();
  Matrix out = Matrix::Zero(d, d);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    out = (out * a).eval();
    out.diagonal().array() += *it;
  }
  return out;
}

cplx poly_at(const std::vector<cplx>& c, cplx z) {
  cplx out = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * z + *it;
  return out;
}

// max over |z| ≤ 1 of |ρ p(z) + (1−ρ) p(0)|, attained on the circle.
double von_neumann_rhs(const std::vector<cplx>& c, double rho) {
  const cplx p0 = c.empty() ? cplx(0.0) : c.front();
  auto f = [&](double th) { return -std::abs(rho * poly_at(c, std::polar(1.0, th)) + (1.0 - rho) * p0); };
  return -detail::periodic_min(f, 1024, 3).value;
}

MembershipOptions fast_membership() {
  MembershipOptions m;
  m.cross_check = false;
  return m;
}

}  // namespace

bool ExperimentReport::passed() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* ExperimentReport::find(const std::string& prefix) const noexcept {
  for (const Claim& c : claims) {
    if (c.description.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------------------------

ExperimentReport repro_scalar_boundary(double rho, double eps) {
  const auto t0 = Clock::now();
  if (!(rho > 0.0 && rho < 1.0)) throw InputError("repro_scalar_boundary: rho must lie in (0, 1)");
  if (!(eps > 0.0 && eps < rho)) throw InputError("repro_scalar_boundary: eps must lie in (0, rho)");

  ExperimentReport rep;
  rep.name = "scalar-boundary";
  const double a = rho / (2.0 - rho);
  const double lower = rho - eps;
  rep.parameters = {{"rho", rho}, {"eps", eps}, {"a", a}};

  const MembershipVerdict in = membership_single(scalar(a), rho);
  const MembershipVerdict out = membership_single(scalar(a), lower);
  rep.claims.push_back(text_claim("a = rho/(2-rho) is in C_rho", "In", to_string(in.decision),
                                  kLiterature));
  rep.claims.push_back(text_claim("a = rho/(2-rho) is not in C_{rho-eps}", "Out",
                                  to_string(out.decision), kLiterature));

  const double analytic = -4.0 * eps / ((2.0 - rho) * (2.0 - rho));
  const OperatorTuple ta = OperatorTuple::single(scalar(a));
  const Point at_pi{cplx(-1.0, 0.0)};
  const double direct = k_rho_kernel(ta, lower, at_pi, at_pi)(0, 0).real();
  rep.claims.push_back(equal_claim("kernel value at r = 1, theta = pi equals -4 eps/(2-rho)^2",
                                   analytic, direct, 1e-10, kLiterature));
  rep.claims.push_back(equal_claim("Out margin of the disk search equals -4 eps/(2-rho)^2",
                                   analytic, out.margin, 1e-8, kLiterature));
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------------------------

double thm51_admissible_eps(double rho) {
  if (!(rho > 1.0)) throw InputError("thm51_admissible_eps: rho must exceed 1");
  // y = (1+ε)/ρ solves (ρ−1) y² + y − 1 = 0.
  const double y = (-1.0 + std::sqrt(4.0 * rho - 3.0)) / (2.0 * (rho - 1.0));
  return rho * y - 1.0;
}

OperatorTuple build_thm51_pair(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InputError("build_thm51_pair: eps must be >= 0");
  const double a = (1.0 + eps) / std::sqrt(2.0);
  Matrix a1 = Matrix::Zero(3, 3);
  Matrix a2 = Matrix::Zero(3, 3);
  a1(0, 1) = a;
  a1(2, 0) = -a;
  a2(0, 2) = a;
  a2(1, 0) = a;
  return OperatorTuple({a1, a2});
}

Matrix thm51_product(double eps) {
  const OperatorTuple p = build_thm51_pair(eps);
  return (p[0] + p[1]) * (p[0] - p[1]);
}

ExperimentReport repro_thm51(double rho, std::optional<double> eps_opt) {
  const auto t0 = Clock::now();
  if (!(rho > 1.0)) throw InputError("repro_thm51: rho must exceed 1");
  const double eps_max = thm51_admissible_eps(rho);
  const double eps = eps_opt.value_or(0.5 * eps_max);
  if (!(eps >= 0.0) || !(eps < eps_max)) {
    throw InputError("repro_thm51: eps = " + num(eps) + " outside the admissible range [0, " +
                     num(eps_max) + ") for rho = " + num(rho));
  }

  ExperimentReport rep;
  rep.name = "thm51";
  rep.parameters = {{"rho", rho}, {"eps", eps}, {"eps_admissible", eps_max}};

  const OperatorTuple a = build_thm51_pair(eps);
  const OperatorTuple a0 = build_thm51_pair(0.0);

  // (1) nilpotency of degree 3 at unimodular points, where every product is exact.
  const std::vector<cplx> units{1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  double cube = 0.0;
  double square = 0.0;
  for (cplx z1 : units) {
    for (cplx z2 : units) {
      const Point z{z1, z2};
      const Matrix t = eval_pencil(a, z);
      const Matrix t2 = t * t;
      cube = std::max(cube, (t2 * t).cwiseAbs().maxCoeff());
      square = std::max(square, t2.cwiseAbs().maxCoeff());
    }
  }
  rep.claims.push_back(equal_claim("(zA)^3 = 0 exactly at the 16 points of {1,i,-1,-i}^2", 0.0,
                                   cube, 0.0, kLiterature));
  rep.claims.push_back(at_least_claim("(zA)^2 is nonzero", 1e-12, square, 0.0, kTrivial));

  // (2) polydisk sup of ‖φ‖ for ε = 0.
  const double bound = (2.0 * rho - 1.0) / (rho * rho);
  const RouteResult sup0 = phi_polydisk_route(a0, rho);
  rep.claims.push_back(at_most_claim("sup ||phi(z)|| over the polydisk grid at eps = 0", bound,
                                     1.0 - sup0.margin, 1e-9, kLiterature));

  // (3) membership for the chosen ε.
  const MembershipVerdict v = membership_tuple(a, rho);
  rep.claims.push_back(text_claim("A^(eps) is in C_{rho,2}", "In", to_string(v.decision),
                                  kLiterature));
  const double bound_eps = (1.0 + eps) / rho + (rho - 1.0) * std::pow((1.0 + eps) / rho, 2);
  rep.claims.push_back(at_most_claim("sup ||phi(z)|| over the polydisk grid at eps", bound_eps,
                                     1.0 - v.margin, 1e-9, kLiterature));

  // (4) divergence of the product powers.
  const DivergenceReport div = divergence_probe(thm51_product(eps), 64);
  rep.claims.push_back(text_claim(
      "growth class of the powers of (A1+A2)(A1-A2)", eps > 0.0 ? "Diverges" : "Bounded",
      to_string(div.growth), kLiterature));
  if (eps > 0.0) {
    const double expected = 2.0 * std::log1p(eps);
    rep.claims.push_back(equal_claim("growth exponent of (A1+A2)(A1-A2) equals 2 log(1+eps)",
                                     expected, div.exponent, 0.2 * expected, kDerived));
  }
  const DivergenceReport div0 = divergence_probe(thm51_product(0.0), 64);
  rep.claims.push_back(text_claim("powers of the product stay bounded at eps = 0", "Bounded",
                                  to_string(div0.growth), kDerived));
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------------------------

ExperimentReport repro_thm53(double rho) {
  const auto t0 = Clock::now();
  if (!(rho > 0.0)) throw InputError("repro_thm53: rho must be positive");
  constexpr int kM = 16;
  constexpr int kDepth = 5;
  constexpr int kShiftWords = 6;
  constexpr int kTreeWords = 4;

  ExperimentReport rep;
  rep.name = "thm53";
  rep.parameters = {{"rho", rho}, {"M", double(kM)}, {"depth", double(kDepth)}};

  // (1) the shift dilation of B.
  const Matrix b = nilpotent_block(rho);
  const ShiftDilation sd = build_shift_unitary_rho_dilation(rho, kM);
  const DilationWitness ws =
      verify_rho_dilation(OperatorTuple::single(b), sd.big, sd.embedding, rho, kShiftWords);
  rep.claims.push_back(at_least_claim("shift rho-dilation of B verified word length",
                                      double(kShiftWords), double(ws.verified_word_length), 0.0,
                                      kDerived));
  rep.claims.push_back(at_most_claim("shift rho-dilation of B max residual", 0.0, ws.max_residual,
                                     1e-10, kDerived));
  rep.claims.push_back(at_most_claim("shift U is unitary", 0.0,
                                     torus_unitarity(sd.big).residual_sum_left, 1e-10, kTrivial));

  // (2) Popescu conditions for the truncated pair.
  const PopescuDilation pd = build_thm53_popescu_dilation(rho, kM, kDepth);
  if (kTreeWords > pd.valid_word_length) {
    throw CapacityError("repro_thm53: truncation window too small");
  }
  const PopescuCertificate pc = popescu_conditions(pd.v, &pd.interior);
  rep.claims.push_back(at_most_claim("Popescu (1) V_k* V_k = I on the interior", 0.0,
                                     pc.isometry_residual, 1e-10, kLiterature));
  rep.claims.push_back(at_most_claim("Popescu (2) V_k* V_j = 0 on the interior", 0.0,
                                     pc.orthogonality_residual, 1e-10, kLiterature));
  rep.claims.push_back(at_least_claim("Popescu (2') lambda_min(I - sum V_k V_k*)", 0.0,
                                      pc.row_contraction_min_eig, 1e-10, kLiterature));
  rep.claims.push_back(text_claim("(1)&(2) agrees with (1)&(2')", "true",
                                  pc.consistent ? "true" : "false", kLiterature));

  // (3) uniform ρ-dilation of the pair.
  const OperatorTuple a = build_thm53_pair(rho);
  const DilationWitness wu = verify_uniform_rho_dilation(a, pd.v, pd.embedding, rho, kTreeWords);
  rep.claims.push_back(at_least_claim("uniform rho-dilation verified word length",
                                      double(kTreeWords), double(wu.verified_word_length), 0.0,
                                      kLiterature));
  rep.claims.push_back(at_most_claim("uniform rho-dilation max residual over 30 words", 0.0,
                                     wu.max_residual, 1e-9, kLiterature));
  {
    const std::vector<int> word{0, 0, 1};
    const Matrix lhs = a[0] * a[0] * a[1];
    const Matrix rhs = rho * compress(pd.v[0] * pd.v[0] * pd.v[1], pd.embedding);
    rep.claims.push_back(at_most_claim("word (1,1,2) compresses to 0 on both sides", 0.0,
                                       std::max(lhs.norm(), rhs.norm()), 1e-12, kDerived));
  }

  // (4) ‖ζA‖ = √2 ρ on the torus, so ζA ∉ C_ρ.
  double worst_norm = 0.0;
  int outs = 0;
  for (const Point& z : torus_grid(2, 4)) {
    const Matrix t = eval_pencil(a, z);
    worst_norm = std::max(worst_norm, std::abs(op_norm(t) - std::sqrt(2.0) * rho));
    if (membership_single(t, rho).decision == Decision::Out) ++outs;
  }
  rep.claims.push_back(at_most_claim("| ||zeta A|| - sqrt(2) rho | at 16 torus points", 0.0,
                                     worst_norm, 1e-9, kLiterature));
  rep.claims.push_back(equal_claim("torus points with zeta A outside C_rho", 16.0, double(outs),
                                   0.0, kLiterature));

  // (5) A itself is not torus-unitary.
  const TorusUnitarityCertificate tu = torus_unitarity(a);
  rep.claims.push_back(text_claim("torus unitarity fails for A", "false",
                                  tu.passed ? "true" : "false", kTrivial));

  const RadiusReport wb = w_rho(b, rho);
  rep.claims.push_back(equal_claim("w_rho(B) = 1", 1.0, wb.value(), 1e-5, kLiterature));
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------------------------

ExperimentReport repro_von_neumann(double rho, int trials, std::uint64_t seed) {
  const auto t0 = Clock::now();
  if (!(rho > 0.0)) throw InputError("repro_von_neumann: rho must be positive");
  if (trials < 1) throw InputError("repro_von_neumann: trials must be >= 1");

  ExperimentReport rep;
  rep.name = "von-neumann";
  const int tuple_trials = std::max(1, trials / 4);
  constexpr int kSamplesPerTuple = 4;
  rep.parameters = {{"rho", rho},
                    {"trials", double(trials)},
                    {"seed", double(seed)},
                    {"tuple_trials", double(tuple_trials)},
                    {"samples_per_tuple", double(kSamplesPerTuple)},
                    {"circle_points", 1024.0}};

  Rng rng(seed);
  std::uniform_int_distribution<int> degree(0, 5);
  auto random_poly = [&] {
    std::vector<cplx> c(std::size_t(degree(rng)) + 1);
    for (auto& x : c) x = random_in_disk(rng);
    return c;
  };

  double worst = std::numeric_limits<double>::infinity();
  double worst_linear = std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    const Index d = 2 + i % 3;
    Matrix a = random_complex_matrix(d, d, rng);
    a *= 0.99 / w_rho(a, rho).hi;
    const std::vector<cplx> c = random_poly();
    worst = std::min(worst, von_neumann_rhs(c, rho) - op_norm(poly_of(c, a)));
    worst_linear = std::min(worst_linear, rho - op_norm(a));
  }
  rep.claims.push_back(at_least_claim("min over trials of rhs - ||p(A)||", 0.0, worst, 1e-7,
                                      kLiterature));
  rep.claims.push_back(at_least_claim("p(z) = z: min of rho - ||A||", 0.0, worst_linear, 1e-7,
                                      kLiterature));

  double worst_tuple = std::numeric_limits<double>::infinity();
  const double factor = std::max(1.0, 2.0 / rho - 1.0);
  for (int i = 0; i < tuple_trials; ++i) {
    OperatorTuple a({random_complex_matrix(2, 2, rng), random_complex_matrix(2, 2, rng)});
    a = a.scaled(cplx(1.0 / (a.norm_sum() * factor), 0.0));
    const std::vector<cplx> c = random_poly();
    const double rhs = von_neumann_rhs(c, rho);
    for (int s = 0; s < kSamplesPerTuple; ++s) {
      const auto ct = sample_commuting_tuple(1 + s % 3, 2, seed * 7919ULL + std::uint64_t(i * kSamplesPerTuple + s));
      worst_tuple = std::min(worst_tuple, rhs - op_norm(poly_of(c, tensor_pencil(a, ct.base))));
    }
  }
  rep.claims.push_back(at_least_claim("tuple version: min of rhs - ||p(A (x) C)||", 0.0,
                                      worst_tuple, 1e-7, kLiterature));

  const cplx k = random_in_disk(rng);
  rep.claims.push_back(equal_claim("constant p: rhs equals |c|", std::abs(k),
                                   von_neumann_rhs({k}, rho), 1e-12, kTrivial));
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------------------------

namespace {

// Worst (smallest) slack for one invariant across all cases.
struct Tracker {
  double worst = std::numeric_limits<double>::infinity();
  int cases = 0;
  void add(double slack) {
    worst = std::min(worst, slack);
    ++cases;
  }
};

}  // namespace

ExperimentReport radius_property_suite(const PropertySuiteOptions& opt) {
  const auto t0 = Clock::now();
  if (opt.seeds.empty() || opt.dims.empty() || opt.rhos.empty()) {
    throw InputError("radius_property_suite: seeds, dims and rhos must be non-empty");
  }
  std::vector<double> rhos = opt.rhos;
  std::sort(rhos.begin(), rhos.end());
  const double width = opt.width;

  ExperimentReport rep;
  rep.name = "radius-properties";
  std::ostringstream rs, ds;
  for (double r : rhos) rs << (rs.tellp() ? "," : "") << r;
  for (int d : opt.dims) ds << (ds.tellp() ? "," : "") << d;
  rep.parameters = {{"seeds", double(opt.seeds.size())},
                    {"first_seed", double(opt.seeds.front())},
                    {"dims", ds.str()},
                    {"rhos", rs.str()},
                    {"width", width},
                    {"power_samples", double(opt.power_samples)},
                    {"tuple_cases", double(opt.tuple_cases)}};

  Tracker monotone, scaling, ordering, symmetry, products, powers, lower_norm, lower_nu, logconv,
      power_bound, scalar_oracle, w1, w2, identity, tuple_reduction, tuple_identity, tuple_numrad;
  const std::vector<double> log_rhos{0.5, 1.0, 2.0, 4.0};
  const std::vector<double> sym_rhos{0.25, 0.5, 1.0, 1.5};

  for (std::size_t si = 0; si < opt.seeds.size(); ++si) {
    const std::uint64_t seed = opt.seeds[si];
    const Index d = opt.dims[si % opt.dims.size()];
    Rng rng(seed);
    const double sd = 1.0 / std::sqrt(double(d));
    const Matrix a = random_complex_matrix(d, d, rng) * sd;
    const Matrix b = random_complex_matrix(d, d, rng) * sd;
    const cplx mu = std::polar(0.5 + 1.5 * std::uniform_real_distribution<double>(0, 1)(rng),
                               2.0 * std::numbers::pi *
                                   std::uniform_real_distribution<double>(0, 1)(rng));
    const double norm_a = op_norm(a);
    const double nu_a = spectral_radius(a);

    std::map<double, double> wa;  // ρ ↦ midpoint of the w_ρ(A) bracket
    std::map<double, RadiusReport> wa_rep;
    auto w_of_a = [&](double rho) {
      auto it = wa.find(rho);
      if (it != wa.end()) return it->second;
      RadiusReport r = w_rho(a, rho, width);
      wa_rep.emplace(rho, r);
      return wa[rho] = r.value();
    };

    // Monotonicity of verdicts on a rescaled copy of A.
    {
      const double s = 0.3 + 1.2 * std::uniform_real_distribution<double>(0, 1)(rng);
      const Matrix m = a * (s / norm_a);
      std::vector<double> margins;
      for (double rho : rhos) margins.push_back(membership_single(m, rho, fast_membership()).margin);
      for (std::size_t i = 0; i < margins.size(); ++i) {
        if (margins[i] < -1e-9) continue;
        for (std::size_t j = i + 1; j < margins.size(); ++j) monotone.add(margins[j] + 1e-8);
      }
    }

    for (double rho : rhos) {
      const double v = w_of_a(rho);
      const double vmu = w_rho(mu * a, rho, width).value();
      scaling.add(2.0 * width - std::abs(vmu - std::abs(mu) * v));

      const double vb = w_rho(b, rho, width).value();
      const double vab = w_rho(a * b, rho, width).value();
      const double c = rho >= 1.0 ? rho * rho : (2.0 - rho) * rho;
      products.add(c * v * vb + 1e-5 - vab);

      Matrix p = a;
      for (int n = 2; n <= 4; ++n) {
        p = (p * a).eval();
        powers.add(std::pow(v, n) + 1e-5 - w_rho(p, rho, width).value());
      }

      lower_norm.add(v - (norm_a / rho - width));
      lower_nu.add(v - (nu_a - width));

      // Power bound for A / w_ρ(A) tensored with sampled contractions.
      const Matrix in = a / wa_rep.at(rho).hi;
      for (int s = 0; s < opt.power_samples; ++s) {
        const auto ct = sample_commuting_tuple(1 + s % 3, 1, seed * 131ULL + std::uint64_t(s));
        const Matrix t = kron(in, ct.base[0]);
        Matrix tn = t;
        for (int n = 1; n <= 8; ++n) {
          if (n > 1) tn = (tn * t).eval();
          power_bound.add(rho + 1e-6 - op_norm(tn));
        }
      }

      const cplx sa = std::polar(0.1 + 1.9 * std::uniform_real_distribution<double>(0, 1)(rng),
                                 2.0 * std::numbers::pi *
                                     std::uniform_real_distribution<double>(0, 1)(rng));
      const double expect = rho >= 1.0 ? std::abs(sa) : std::abs(sa) * (2.0 / rho - 1.0);
      scalar_oracle.add(width - std::abs(w_rho(scalar(sa), rho, width).value() - expect));

      if (rho == 1.0) w1.add(1e-5 - std::abs(v - norm_a));
      if (rho == 2.0) w2.add(1e-5 - std::abs(v - numerical_radius(a)));
      if (si == 0) {
        const double expect_i = rho >= 1.0 ? 1.0 : 2.0 / rho - 1.0;
        identity.add(width - std::abs(w_rho(Matrix::Identity(d, d), rho, width).value() - expect_i));
      }
    }

    for (std::size_t i = 0; i + 1 < rhos.size(); ++i) {
      const double r = rhos[i], rp = rhos[i + 1];
      const double v = w_of_a(r), vp = w_of_a(rp);
      ordering.add(std::min(v + 2.0 * width - vp, (2.0 * rp / r - 1.0) * vp + 2.0 * width - v));
    }
    for (double r : sym_rhos) {
      if (std::find(rhos.begin(), rhos.end(), r) == rhos.end()) continue;
      symmetry.add(4.0 * width - std::abs(r * w_of_a(r) - (2.0 - r) * w_of_a(2.0 - r)));
    }
    for (std::size_t i = 0; i < log_rhos.size(); ++i) {
      for (std::size_t j = i + 1; j < log_rhos.size(); ++j) {
        const double m = 0.5 * (log_rhos[i] + log_rhos[j]);
        logconv.add(0.5 * (std::log(w_of_a(log_rhos[i])) + std::log(w_of_a(log_rhos[j]))) + 1e-4 -
                    std::log(w_of_a(m)));
      }
    }

    if (int(si) < opt.tuple_cases) {
      RadiusOptions ro;
      ro.width = width;
      ro.membership.budget = 4;
      ro.membership.seed = seed;
      ro.membership.polydisk.theta_points = 32;
      ro.torus_points = 16;
      const OperatorTuple pair({a, Matrix::Zero(d, d)});
      const OperatorTuple ipair({Matrix::Identity(d, d), Matrix::Zero(d, d)});
      for (double rho : rhos) {
        tuple_reduction.add(width - std::abs(w_rho_tuple(pair, rho, ro).value() - w_of_a(rho)));
        const double expect_i = rho >= 1.0 ? 1.0 : 2.0 / rho - 1.0;
        tuple_identity.add(width - std::abs(w_rho_tuple(ipair, rho, ro).value() - expect_i));
      }
      tuple_numrad.add(1e-6 - std::abs(tuple_numerical_radius(pair, 4, seed, 16) -
                                       numerical_radius(a)));
    }
  }

  auto push = [&](const std::string& desc, const Tracker& t, double tol, const char* prov) {
    if (t.cases == 0) return;
    rep.claims.push_back(at_least_claim(desc + " (" + std::to_string(t.cases) + " cases)", 0.0,
                                        t.worst, 0.0, prov));
    rep.claims.back().tolerance = tol;
  };
  push("monotone verdicts in rho, worst later margin + 1e-8", monotone, 1e-8, kLiterature);
  push("scaling w(mu A) = |mu| w(A), worst 2 width - deviation", scaling, 2 * width, kLiterature);
  push("ordering w_rho' <= w_rho <= (2rho'/rho - 1) w_rho', worst slack", ordering, 2 * width,
       kLiterature);
  push("symmetry rho w_rho = (2-rho) w_{2-rho}, worst 4 width - deviation", symmetry, 4 * width,
       kLiterature);
  push("products w(AB) <= c(rho) w(A) w(B), worst slack", products, 1e-5, kLiterature);
  push("powers w(A^n) <= w(A)^n, worst slack", powers, 1e-5, kLiterature);
  push("lower bound w_rho >= ||A||/rho, worst slack", lower_norm, width, kLiterature);
  push("lower bound w_rho >= nu(A), worst slack", lower_nu, width, kLiterature);
  push("midpoint log-convexity in rho, worst slack", logconv, 1e-4, kLiterature);
  push("power bound ||(A (x) C)^n|| <= rho for A in C_rho, worst slack", power_bound, 1e-6,
       kLiterature);
  push("scalar oracle w_rho(a), worst width - deviation", scalar_oracle, width, kDerived);
  push("w_1 = operator norm, worst 1e-5 - deviation", w1, 1e-5, kLiterature);
  push("w_2 = numerical radius, worst 1e-5 - deviation", w2, 1e-5, kLiterature);
  push("w_rho(I) values, worst width - deviation", identity, width, kLiterature);
  push("w_{rho,2}(A, 0) = w_rho(A), worst width - deviation", tuple_reduction, width, kTrivial);
  push("w_{rho,2}(I, 0) values, worst width - deviation", tuple_identity, width, kLiterature);
  push("w^(2)(A, 0) = w(A), worst 1e-6 - deviation", tuple_numrad, 1e-6, kTrivial);
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------------------------

ExperimentReport repro_class_monotonicity(int n_vars, const std::vector<double>& rho_grid,
                                          std::uint64_t seed, int cases) {
  const auto t0 = Clock::now();
  if (n_vars < 1) throw InputError("repro_class_monotonicity: n_vars must be >= 1");
  if (rho_grid.empty()) throw InputError("repro_class_monotonicity: empty rho grid");
  for (std::size_t i = 0; i < rho_grid.size(); ++i) {
    if (!(rho_grid[i] > 0.0)) throw InputError("repro_class_monotonicity: rho must be positive");
    if (i && !(rho_grid[i] > rho_grid[i - 1])) {
      throw InputError("repro_class_monotonicity: rho grid must be strictly ascending");
    }
  }

  ExperimentReport rep;
  rep.name = "monotonicity";
  std::ostringstream rs;
  for (double r : rho_grid) rs << (rs.tellp() ? "," : "") << r;
  rep.parameters = {{"n_vars", double(n_vars)},
                    {"rhos", rs.str()},
                    {"seed", double(seed)},
                    {"cases", double(cases)},
                    {"polydisk_theta_per_axis", 32.0}};

  // Strictness below 1: a = ρ'/(2−ρ') is in C_ρ' but not in C_ρ for ρ < ρ' < 1.
  int chain_pairs = 0;
  int chain_ok = 0;
  for (std::size_t i = 0; i + 1 < rho_grid.size(); ++i) {
    const double r = rho_grid[i], rp = rho_grid[i + 1];
    if (rp >= 1.0) break;
    const Matrix a = scalar(rp / (2.0 - rp));
    ++chain_pairs;
    if (membership_single(a, rp).decision == Decision::In &&
        membership_single(a, r).decision == Decision::Out) {
      ++chain_ok;
    }
  }
  if (chain_pairs > 0) {
    rep.claims.push_back(equal_claim("scalar witnesses separate consecutive classes below 1",
                                     double(chain_pairs), double(chain_ok), 0.0, kLiterature));
  }

  Rng rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  // Coincidence at and above 1 for scalars.
  std::vector<double> high;
  for (double r : rho_grid) {
    if (r >= 1.0) high.push_back(r);
  }
  if (high.size() >= 2) {
    int mismatches = 0;
    for (int i = 0; i < cases; ++i) {
      const cplx a = std::polar(0.2 + 1.6 * u01(rng), 2.0 * std::numbers::pi * u01(rng));
      const MembershipVerdict first = membership_single(scalar(a), high.front());
      for (std::size_t k = 1; k < high.size(); ++k) {
        if (!verdicts_agree(first, membership_single(scalar(a), high[k]))) ++mismatches;
      }
    }
    rep.claims.push_back(equal_claim("scalar verdicts coincide for rho >= 1", 0.0,
                                     double(mismatches), 0.0, kLiterature));
  }

  // Nesting on random tuples.
  MembershipOptions mo;
  mo.cross_check = false;
  mo.polydisk.theta_points = 32;
  mo.budget = 8;
  mo.seed = seed;
  int violations = 0;
  int in_count = 0;
  const Index d = n_vars == 1 ? 3 : 2;
  for (int i = 0; i < cases; ++i) {
    std::vector<Matrix> mats;
    for (int k = 0; k < n_vars; ++k) mats.push_back(random_complex_matrix(d, d, rng));
    OperatorTuple a(std::move(mats));
    a = a.scaled(cplx((0.3 + 1.2 * u01(rng)) / a.norm_sum(), 0.0));
    bool seen_in = false;
    for (double r : rho_grid) {
      const bool in = membership_tuple(a, r, mo).decision == Decision::In;
      if (seen_in && !in) ++violations;
      seen_in = seen_in || in;
      in_count += in ? 1 : 0;
    }
  }
  rep.claims.push_back(equal_claim("In at rho implies In at every larger rho (violations)", 0.0,
                                   double(violations), 0.0, kDerived));
  rep.parameters["in_verdicts"] = double(in_count);
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

}  // namespace rho
