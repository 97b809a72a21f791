#include "vstoch/serialize.hpp"

#include "vstoch/errors.hpp"

namespace vstoch {

Field parse_field(std::string_view name) {
  if (name == "R") return Field::R;
  if (name == "C") return Field::C;
  if (name == "H") return Field::H;
  throw InvalidInputError("unknown field '" + std::string(name) + "' (expected R, C or H)");
}

namespace {

double number_from(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInputError(std::string(what) + " must be a number");
  return j.get<double>();
}

Json scalar_to_json(double s) { return Json(s); }
Json scalar_to_json(const Complex& s) { return Json::array({s.real(), s.imag()}); }
Json scalar_to_json(const Quaternion& s) { return Json::array({s.w, s.x, s.y, s.z}); }

template <ScalarType T>
T scalar_from_json(const Json& j) {
  if constexpr (std::same_as<T, double>) {
    return number_from(j, "real scalar");
  } else {
    constexpr int k = coeff_count_v<T>;
    if (!j.is_array() || j.size() != k)
      throw InvalidInputError("scalar must be an array of " + std::to_string(k) + " numbers");
    std::array<double, k> c;
    for (int i = 0; i < k; ++i) c[i] = number_from(j[i], "scalar coefficient");
    return from_coeffs<T>(c);
  }
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& rows, int n) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InvalidInputError("'rows' must be an array of n rows");
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InvalidInputError("row " + std::to_string(r) + " must have n entries");
    for (int c = 0; c < n; ++c) m(r, c) = number_from(row[c], "matrix entry");
  }
  return m;
}

template <ScalarType T>
Json vm_to_json(const VectorMatrix<T>& v) {
  Json rows = Json::array();
  for (int r = 0; r < v.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < v.n(); ++c) {
      Json entry = Json::array();
      for (int s = 0; s < v.d(); ++s) entry.push_back(scalar_to_json(v.entry(r, c)[s]));
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"field", std::string(field_name(v.field()))},
              {"n", v.n()},
              {"d", v.d()},
              {"rows", std::move(rows)}};
}

template <ScalarType T>
VectorMatrix<T> vm_from_json(const Json& j, int n, int d) {
  VectorMatrix<T> v(n, d);
  const Json& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InvalidInputError("'rows' must be an array of n rows");
  for (int r = 0; r < n; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InvalidInputError("row " + std::to_string(r) + " must have n entries");
    for (int c = 0; c < n; ++c) {
      const Json& entry = row[c];
      if (!entry.is_array() || static_cast<int>(entry.size()) != d)
        throw InvalidInputError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") must be an array of d scalars");
      for (int s = 0; s < d; ++s) v.entry(r, c)[s] = scalar_from_json<T>(entry[s]);
    }
  }
  return v;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidInputError(std::string("missing or non-integer '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

Json to_json(const Bistochastic& p) {
  return Json{{"n", p.n()}, {"rows", matrix_to_json(p.matrix())}};
}

Bistochastic bistochastic_from_json(const Json& j, double tol) {
  if (!j.is_object()) throw InvalidInputError("expected a JSON object");
  const int n = int_field(j, "n");
  if (n < 1) throw InvalidInputError("'n' must be positive");
  if (j.contains("tol")) tol = number_from(j.at("tol"), "'tol'");
  return Bistochastic(matrix_from_json(j.at("rows"), n), tol);
}

Json to_json(const AnyVectorMatrix& v) {
  return std::visit([](const auto& m) { return vm_to_json(m); }, v);
}

AnyVectorMatrix vector_matrix_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInputError("expected a JSON object");
  if (!j.contains("field") || !j.at("field").is_string())
    throw InvalidInputError("missing 'field'");
  const Field f = parse_field(j.at("field").get<std::string>());
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  if (n < 1 || d < 1) throw InvalidInputError("'n' and 'd' must be positive");
  switch (f) {
    case Field::R: return vm_from_json<double>(j, n, d);
    case Field::C: return vm_from_json<Complex>(j, n, d);
    case Field::H: return vm_from_json<Quaternion>(j, n, d);
  }
  throw InvalidInputError("unknown field");
}

AnyVectorMatrix vector_matrix_from_any_json(const Json& j) {
  if (j.is_object() && j.contains("rows") && j.contains("field"))
    return vector_matrix_from_json(j);
  if (j.is_object() && j.contains("V")) return vector_matrix_from_json(j.at("V"));
  if (j.is_object() && j.contains("best_V"))
    return vector_matrix_from_json(j.at("best_V"));
  throw InvalidInputError(
      "expected a vector-entry matrix, a construction result or a search result");
}

Json to_json(const IsometryReport& r) {
  return Json{{"ok", r.ok},
              {"tol", r.tol},
              {"max_residual_cols", r.max_residual_cols},
              {"max_residual_rows", r.max_residual_rows},
              {"worst_pair", Json::array({r.worst_col_j, r.worst_col_k})},
              {"residual_cols", matrix_to_json(r.residual_cols)},
              {"residual_rows", matrix_to_json(r.residual_rows)}};
}

Json to_json(const FeasibilityReport& r) {
  Json zeros = Json::array();
  for (const auto& [row, col] : r.offdiag_zero_pairs)
    zeros.push_back(Json::array({row, col}));
  return Json{{"n", r.n},
              {"slacks", r.slacks},
              {"offdiag_zero_pairs", std::move(zeros)},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const ConstructionResult& r) {
  return Json{{"mode", to_string(r.mode)},
              {"success", r.success()},
              {"residual_nu", r.residual_nu},
              {"residual_isometry", r.residual_isometry},
              {"A", matrix_to_json(r.A)},
              {"V", vm_to_json(r.V)}};
}

Json to_json(const SearchConfig& cfg) {
  return Json{{"field", std::string(field_name(cfg.field))},
              {"n", cfg.n},
              {"d", cfg.d},
              {"restarts", cfg.restarts},
              {"max_iters", cfg.max_iters},
              {"step_init", cfg.step_init},
              {"success_tol", cfg.success_tol},
              {"seed", cfg.seed}};
}

Json to_json(const SearchResult& r) {
  return Json{{"success", r.success},
              {"best_residual", r.best_residual},
              {"iters_used", r.iters_used},
              {"restarts_used", r.restarts_used},
              {"best_V", to_json(r.best_v)}};
}

Json to_json(const DimensionReport& r) {
  return Json{{"field", std::string(field_name(r.field))},
              {"n", r.n},
              {"d", r.d},
              {"dim_iso", r.dim_iso},
              {"dim_doc", r.dim_doc}};
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace vstoch
