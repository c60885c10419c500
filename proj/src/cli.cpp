#include "rho/cli.hpp"

#include <cstdio>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rho/io.hpp"

namespace rho {

namespace {

struct Settings {
  std::uint64_t seed = 0;
  std::string output;
  std::string format;

  double rho = 1.0;
  std::string input;
  double width = 1e-6;
  double tol = 1e-9;
  int budget = kDefaultSampleBudget;

  std::string mode = "sym";
  std::string small, big, embedding;
  int nmax = 4;

  std::string name;
  std::optional<double> repro_rho;
  std::optional<double> eps;
  int trials = 200;
  int seeds = 50;
  int n_vars = 2;
  int cases = 10;
  std::vector<double> rho_grid{0.25, 0.5, 1.0, 1.5, 2.0, 3.0};

  double rho_from = 0.5, rho_to = 2.0;
  int steps = 16;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

OperatorTuple load_tuple(const std::string& path) { return tuple_from_json(read_json_file(path)); }

RadiusReport radius_of(const OperatorTuple& a, double rho, double width, std::uint64_t seed) {
  RadiusOptions opt;
  opt.width = width;
  opt.membership.seed = seed;
  if (a.n_vars() == 1) return w_rho(a[0], rho, opt);
  return w_rho_tuple(a, rho, opt);
}

Json cmd_radius(const Settings& s) {
  return to_json(radius_of(load_tuple(s.input), s.rho, s.width, s.seed));
}

Json cmd_membership(const Settings& s) {
  const OperatorTuple a = load_tuple(s.input);
  MembershipOptions opt;
  opt.tol = s.tol;
  opt.budget = s.budget;
  opt.seed = s.seed;
  if (a.n_vars() == 1) return to_json(membership_single(a[0], s.rho, opt));
  return to_json(membership_tuple(a, s.rho, opt));
}

Json cmd_numrad(const Settings& s) {
  const OperatorTuple a = load_tuple(s.input);
  if (a.n_vars() == 1) {
    return Json{{"numerical_radius", numerical_radius(a[0])}, {"n_vars", 1}};
  }
  const int torus_points = 64;
  return Json{{"numerical_radius", tuple_numerical_radius(a, s.budget, s.seed, torus_points)},
              {"n_vars", a.n_vars()},
              {"budget", s.budget},
              {"seed", s.seed},
              {"torus_points", torus_points}};
}

Json cmd_verify(const Settings& s) {
  const OperatorTuple small = load_tuple(s.small);
  const OperatorTuple big = load_tuple(s.big);
  const Embedding e = embedding_from_json(read_json_file(s.embedding));
  if (s.mode == "sym") return to_json(verify_rho_dilation(small, big, e, s.rho, s.nmax));
  return to_json(verify_uniform_rho_dilation(small, big, e, s.rho, s.nmax));
}

ExperimentReport cmd_repro(const Settings& s) {
  if (s.name == "scalar-boundary") {
    return repro_scalar_boundary(s.repro_rho.value_or(0.5), s.eps.value_or(0.25));
  }
  if (s.name == "thm51") return repro_thm51(s.repro_rho.value_or(2.0), s.eps);
  if (s.name == "thm53") return repro_thm53(s.repro_rho.value_or(1.0));
  if (s.name == "von-neumann") return repro_von_neumann(s.repro_rho.value_or(1.0), s.trials, s.seed);
  if (s.name == "radius-properties") {
    PropertySuiteOptions opt;
    opt.seeds.resize(static_cast<std::size_t>(s.seeds));
    std::iota(opt.seeds.begin(), opt.seeds.end(), s.seed);
    opt.width = s.width;
    if (s.repro_rho) opt.rhos = {*s.repro_rho};
    return radius_property_suite(opt);
  }
  return repro_class_monotonicity(s.n_vars, s.rho_grid, s.seed, s.cases);
}

std::string cmd_sweep(const Settings& s, bool csv) {
  if (s.steps < 1) throw InputError("--steps must be at least 1");
  if (!(s.rho_from > 0.0) || !(s.rho_to > 0.0)) throw InputError("sweep bounds must be positive");
  const OperatorTuple a = load_tuple(s.input);
  std::vector<double> rhos(static_cast<std::size_t>(s.steps));
  for (int i = 0; i < s.steps; ++i) {
    rhos[std::size_t(i)] =
        s.steps == 1 ? s.rho_from : s.rho_from + (s.rho_to - s.rho_from) * i / (s.steps - 1);
  }
  std::vector<RadiusReport> reports;
  for (double r : rhos) reports.push_back(radius_of(a, r, s.width, s.seed));

  if (csv) {
    std::string out = "rho,w_rho,lo,hi\n";
    for (std::size_t i = 0; i < rhos.size(); ++i) {
      out += fmt(rhos[i]) + "," + fmt(reports[i].value()) + "," + fmt(reports[i].lo) + "," +
             fmt(reports[i].hi) + "\n";
    }
    return out;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    Json row = to_json(reports[i]);
    row["rho"] = rhos[i];
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.output.empty()) {
    out << text;
  } else {
    write_file_atomic(s.output, text);
  }
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Membership tests, radii and dilations for rho-contractions", "rho-radii"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", s.seed, "Random seed")->capture_default_str();
  app.add_option("--output", s.output, "Write the report to this file instead of stdout");
  app.add_option("--format", s.format, "Output format (csv is accepted by sweep only)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* radius = app.add_subcommand("radius", "Bracket the rho-radius of a matrix or tuple");
  radius->add_option("--rho", s.rho)->required();
  radius->add_option("--input", s.input)->required();
  radius->add_option("--width", s.width)->capture_default_str();

  auto* membership = app.add_subcommand("membership", "Decide membership in the rho-class");
  membership->add_option("--rho", s.rho)->required();
  membership->add_option("--input", s.input)->required();
  membership->add_option("--tol", s.tol)->capture_default_str();
  membership->add_option("--budget", s.budget)->capture_default_str();

  auto* numrad = app.add_subcommand("numrad", "Numerical radius");
  numrad->add_option("--input", s.input)->required();
  numrad->add_option("--budget", s.budget)->capture_default_str();

  auto* verify = app.add_subcommand("verify-dilation", "Check a rho-dilation on words");
  verify->add_option("--mode", s.mode)->check(CLI::IsMember({"sym", "uniform"}))->capture_default_str();
  verify->add_option("--small", s.small)->required();
  verify->add_option("--big", s.big)->required();
  verify->add_option("--embedding", s.embedding)->required();
  verify->add_option("--rho", s.rho)->required();
  verify->add_option("--nmax", s.nmax)->capture_default_str();

  auto* repro = app.add_subcommand("repro", "Run a reproduction experiment");
  repro->add_option("--name", s.name)
      ->required()
      ->check(CLI::IsMember({"scalar-boundary", "thm51", "thm53", "von-neumann",
                             "radius-properties", "monotonicity"}));
  repro->add_option("--rho", s.repro_rho);
  repro->add_option("--eps", s.eps);
  repro->add_option("--trials", s.trials)->capture_default_str();
  repro->add_option("--seeds", s.seeds, "Number of seeds for radius-properties")->capture_default_str();
  repro->add_option("--width", s.width)->capture_default_str();
  repro->add_option("--n-vars", s.n_vars)->capture_default_str();
  repro->add_option("--cases", s.cases)->capture_default_str();
  repro->add_option("--rho-grid", s.rho_grid)->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "Tabulate w_rho over a range of rho");
  sweep->add_option("--rho-from", s.rho_from)->required();
  sweep->add_option("--rho-to", s.rho_to)->required();
  sweep->add_option("--steps", s.steps)->required();
  sweep->add_option("--input", s.input)->required();
  sweep->add_option("--width", s.width)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what());
    return kExitInput;
  }

  try {
    if (s.format == "csv" && !sweep->parsed()) {
      throw InputError("--format csv is only supported by sweep");
    }
    if (sweep->parsed()) {
      emit(s, cmd_sweep(s, s.format != "json"), out);
      return kExitOk;
    }
    if (repro->parsed()) {
      const ExperimentReport r = cmd_repro(s);
      emit(s, to_json(r).dump(2) + "\n", out);
      return r.passed() ? kExitOk : kExitClaimsFailed;
    }
    Json report;
    if (radius->parsed()) report = cmd_radius(s);
    else if (membership->parsed()) report = cmd_membership(s);
    else if (numrad->parsed()) report = cmd_numrad(s);
    else report = cmd_verify(s);
    emit(s, report.dump(2) + "\n", out);
    return kExitOk;
  } catch (const InputError& e) {
    error_json(err, e.kind(), e.what());
    return kExitInput;
  } catch (const CapacityError& e) {
    error_json(err, e.kind(), e.what());
    return kExitCapacity;
  } catch (const Error& e) {
    error_json(err, e.kind(), e.what());
    return kExitOther;
  } catch (const Json::exception& e) {
    error_json(err, "input", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    error_json(err, "internal", e.what());
    return kExitOther;
  }
}

}  // namespace rho
