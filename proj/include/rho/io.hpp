#pragma once

#include <string>

#include <json.hpp>

#include "rho/dilation.hpp"
#include "rho/repro.hpp"

namespace rho {

using Json = nlohmann::json;

// Matrix: {"rows": m, "cols": n, "data": [[re, im], ...]} row-major.
Matrix matrix_from_json(const Json& j);
Json to_json(const Matrix& m);

// Tuple: {"n_vars": N, "mats": [matrix, ...]}. A bare matrix reads as a one-variable tuple.
OperatorTuple tuple_from_json(const Json& j);
Json to_json(const OperatorTuple& t);

// Polynomial: {"n_vars": N, "terms": [{"index": [t_1, ...], "coef": matrix}, ...]}.
MatrixPolynomial polynomial_from_json(const Json& j);
Json to_json(const MatrixPolynomial& p);

// Embedding: {"ambient_dim": n, "basis": matrix}.
Embedding embedding_from_json(const Json& j);
Json to_json(const Embedding& e);

Json to_json(const Point& z);
Json to_json(const RouteResult& r);
Json to_json(const MembershipVerdict& v);
Json to_json(const RadiusReport& r);
Json to_json(const DilationWitness& w);
Json to_json(const TorusUnitarityCertificate& c);
Json to_json(const PopescuCertificate& c);
Json to_json(const SimilarityReport& r);
Json to_json(const DivergenceReport& r);
Json to_json(const ExperimentReport& r);

/// Parses a file; malformed content or a missing file raise InputError.
Json read_json_file(const std::string& path);
/// Writes through a temporary file in the same directory followed by a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace rho
