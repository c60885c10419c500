#include "rho/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rho {

namespace {

// NaN and infinities have no JSON spelling; they become null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

Index count_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string(what) + ": \"" + key + "\" must be a nonnegative integer");
  }
  return Index(v.get<long long>());
}

Json report_value(const ReportValue& v) {
  return std::visit([](const auto& x) -> Json {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
      return number(x);
    } else {
      return Json(x);
    }
  }, v);
}

Json parameters(const std::map<std::string, double>& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = number(v);
  return out;
}

Json residuals(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

}  // namespace

Matrix matrix_from_json(const Json& j) {
  constexpr const char* what = "matrix";
  const Index rows = count_field(j, "rows", what);
  const Index cols = count_field(j, "cols", what);
  const Json& data = field(j, "data", what);
  if (!data.is_array() || Index(data.size()) != rows * cols) {
    throw InputError("matrix: \"data\" must hold rows*cols = " + std::to_string(rows * cols) +
                     " entries");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index k = 0; k < cols; ++k) {
      const Json& e = data[std::size_t(i * cols + k)];
      if (e.is_number()) {
        m(i, k) = cplx(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
      } else {
        throw InputError("matrix: entry " + std::to_string(i * cols + k) +
                         " must be [re, im] or a real number");
      }
    }
  }
  require_finite(m, "matrix");
  return m;
}

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index k = 0; k < m.cols(); ++k) {
      data.push_back(Json::array({number(m(i, k).real()), number(m(i, k).imag())}));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

OperatorTuple tuple_from_json(const Json& j) {
  if (j.is_object() && j.contains("rows")) return OperatorTuple::single(matrix_from_json(j));
  const Index n = count_field(j, "n_vars", "tuple");
  const Json& mats = field(j, "mats", "tuple");
  if (!mats.is_array() || Index(mats.size()) != n) {
    throw InputError("tuple: \"mats\" must hold n_vars matrices");
  }
  std::vector<Matrix> out;
  for (const Json& m : mats) out.push_back(matrix_from_json(m));
  return OperatorTuple(std::move(out));
}

Json to_json(const OperatorTuple& t) {
  Json mats = Json::array();
  for (const Matrix& m : t) mats.push_back(to_json(m));
  return Json{{"n_vars", t.n_vars()}, {"mats", std::move(mats)}};
}

MatrixPolynomial polynomial_from_json(const Json& j) {
  const Index n = count_field(j, "n_vars", "polynomial");
  const Json& terms = field(j, "terms", "polynomial");
  if (!terms.is_array() || terms.empty()) {
    throw InputError("polynomial: \"terms\" must be a non-empty array");
  }
  std::optional<MatrixPolynomial> p;
  for (const Json& t : terms) {
    const Json& idx = field(t, "index", "polynomial term");
    if (!idx.is_array() || Index(idx.size()) != n) {
      throw InputError("polynomial term: \"index\" must have n_vars entries");
    }
    std::vector<int> comps;
    for (const Json& c : idx) {
      if (!c.is_number_integer()) throw InputError("polynomial term: index entries must be integers");
      comps.push_back(c.get<int>());
    }
    const Matrix coef = matrix_from_json(field(t, "coef", "polynomial term"));
    if (!p) p.emplace(n, coef.rows());
    p->add_term(MultiIndex(std::move(comps)), coef);
  }
  return *p;
}

Json to_json(const MatrixPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [t, coef] : p.terms()) {
    terms.push_back(Json{{"index", t.components()}, {"coef", to_json(coef)}});
  }
  return Json{{"n_vars", p.n_vars()}, {"terms", std::move(terms)}};
}

Embedding embedding_from_json(const Json& j) {
  const Index n = count_field(j, "ambient_dim", "embedding");
  return Embedding(n, matrix_from_json(field(j, "basis", "embedding")));
}

Json to_json(const Embedding& e) {
  return Json{{"ambient_dim", e.ambient_dim()}, {"basis", to_json(e.basis())}};
}

Json to_json(const Point& z) {
  Json out = Json::array();
  for (const cplx& c : z) out.push_back(Json::array({number(c.real()), number(c.imag())}));
  return out;
}

Json to_json(const RouteResult& r) {
  return Json{{"route", r.route},
              {"margin", number(r.margin)},
              {"witness", to_json(r.witness)},
              {"pole", r.pole},
              {"evaluations", r.evaluations}};
}

Json to_json(const MembershipVerdict& v) {
  Json routes = Json::array();
  for (const RouteResult& r : v.routes) routes.push_back(to_json(r));
  return Json{{"decision", to_string(v.decision)},
              {"margin", number(v.margin)},
              {"tol", number(v.tol)},
              {"on_boundary", v.on_boundary()},
              {"exactness", to_string(v.exactness)},
              {"route", v.route},
              {"witness", to_json(v.witness)},
              {"certificate", v.certificate},
              {"routes", std::move(routes)},
              {"grid_spec", parameters(v.parameters)}};
}

Json to_json(const RadiusReport& r) {
  return Json{{"lo", number(r.lo)},
              {"hi", number(r.hi)},
              {"method", r.method},
              {"iterations", r.iterations},
              {"lo_exactness", to_string(r.lo_exactness)},
              {"hi_exactness", to_string(r.hi_exactness)},
              {"grid_spec", parameters(r.parameters)},
              {"wall_time_s", number(r.wall_time_s)}};
}

Json to_json(const DilationWitness& w) {
  return Json{{"small", to_json(w.small)},
              {"big", to_json(w.big)},
              {"embedding", to_json(w.embedding)},
              {"rho", number(w.rho)},
              {"mode", to_string(w.mode)},
              {"checked_word_length", w.checked_word_length},
              {"verified_word_length", w.verified_word_length},
              {"max_residual", number(w.max_residual)},
              {"residual_by_length", residuals(w.residual_by_length)},
              {"worst", w.worst},
              {"passed", w.passed()}};
}

Json to_json(const TorusUnitarityCertificate& c) {
  return Json{{"residual_sum_right", number(c.residual_sum_right)},
              {"residual_sum_left", number(c.residual_sum_left)},
              {"cross_residual_left", number(c.cross_residual_left)},
              {"cross_residual_right", number(c.cross_residual_right)},
              {"passed", c.passed}};
}

Json to_json(const PopescuCertificate& c) {
  return Json{{"isometry_residual", number(c.isometry_residual)},
              {"orthogonality_residual", number(c.orthogonality_residual)},
              {"row_contraction_min_eig", number(c.row_contraction_min_eig)},
              {"isometry", c.isometry},
              {"orthogonal_ranges", c.orthogonal_ranges},
              {"row_contraction", c.row_contraction},
              {"consistent", c.consistent},
              {"restricted", c.restricted}};
}

Json to_json(const SimilarityReport& r) {
  return Json{{"residual", number(r.residual)},
              {"sigma_min", number(r.sigma_min)},
              {"condition_number", number(r.condition_number)},
              {"passed", r.passed}};
}

Json to_json(const DivergenceReport& r) {
  return Json{{"norms", residuals(r.norms)},
              {"exponent", number(r.exponent)},
              {"growth", to_string(r.growth)},
              {"capped", r.capped},
              {"monotone_tail", r.monotone_tail}};
}

Json to_json(const ExperimentReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = report_value(v);
  Json claims = Json::array();
  for (const Claim& c : r.claims) {
    claims.push_back(Json{{"description", c.description},
                          {"expected", report_value(c.expected)},
                          {"observed", report_value(c.observed)},
                          {"tolerance", number(c.tolerance)},
                          {"pass", c.pass},
                          {"provenance", c.provenance}});
  }
  return Json{{"name", r.name},
              {"parameters", std::move(params)},
              {"claims", std::move(claims)},
              {"pass", r.passed()},
              {"wall_time_s", number(r.wall_time_s)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw InputError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot move output into place at " + path + ": " + ec.message());
  }
}

}  // namespace rho
