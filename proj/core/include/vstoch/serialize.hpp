#pragma once

#include <nlohmann/json.hpp>

#include "vstoch/bistochastic.hpp"
#include "vstoch/construct.hpp"
#include "vstoch/core_ops.hpp"
#include "vstoch/search.hpp"
#include "vstoch/vector_matrix.hpp"

namespace vstoch {

using Json = nlohmann::json;

// Scalars encode as: R -> number, C -> [re, im], H -> [w, x, y, z].
// Indices in files are 0-based, matrices row-major.

Json to_json(const Bistochastic& p);
Bistochastic bistochastic_from_json(const Json& j, double tol = kDefaultTol);

Json to_json(const AnyVectorMatrix& v);
AnyVectorMatrix vector_matrix_from_json(const Json& j);

Json to_json(const IsometryReport& r);
Json to_json(const FeasibilityReport& r);
Json to_json(const ConstructionResult& r);
Json to_json(const SearchConfig& cfg);
Json to_json(const SearchResult& r);
Json to_json(const DimensionReport& r);

Json error_json(const std::string& code, const std::string& message);

/// Extracts the vector-entry matrix from a bare matrix object or from a
/// wrapped result ("V" of a construction, "best_V" of a search).
AnyVectorMatrix vector_matrix_from_any_json(const Json& j);

}  // namespace vstoch
