#pragma once

#include <filesystem>
#include <json.hpp>

#include "ltc/gma.hpp"

namespace ltc {

using Json = nlohmann::ordered_json;

/// Rationals are written as "p/q", or "p" when q = 1. Reading also accepts JSON integers.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& where);

/// { "dim": n, "labels": [...], "table": [i][j][k] }
Json to_json(const StructureConstants& alg);
StructureConstants structure_constants_from_json(const Json& j);

/// { "dim": d, "left": [...], "right": [...] } with the flat layouts of Bimodule.
Json to_json(const Bimodule& m);
Bimodule bimodule_from_json(const Json& j, const std::string& where);

/// { "A", "B", "M", "N", "zeta", "psi" }
Json to_json(const MoritaContext& ctx);
MoritaContext morita_context_from_json(const Json& j);

/// { "algebra_hash": hex, "matrix": list of columns }.
Json operator_to_json(const StructureConstants& alg, const LinearOperator& op);
/// Throws HashMismatch when the file was written for another algebra.
LinearOperator operator_from_json(const StructureConstants& alg, const Json& j);

/// Throws InvalidDocument when the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path& path);

}  // namespace ltc
