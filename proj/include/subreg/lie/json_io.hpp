#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/lie/certificate.hpp"
#include "subreg/lie/subspace.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::lie {

/// Raised for malformed input documents (the CLI maps it to exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io_detail {

inline GaussianRational value(const Json& j, const char* where) {
  if (!j.is_string()) throw ParseError(std::string(where) + ": expected a value string");
  try {
    return qi::parse_gaussian(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
}

inline Vector vector(const Json& j, std::size_t len, const char* where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
  if (j.size() != len)
    throw ParseError(std::string(where) + ": expected length " + std::to_string(len) + ", got " +
                     std::to_string(j.size()));
  Vector v(len);
  for (std::size_t k = 0; k < len; ++k) v[k] = value(j[k], where);
  return v;
}

inline std::size_t index(const Json& j, std::size_t bound, const char* where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(std::string(where) + ": expected a non-negative index");
  auto k = j.get<std::size_t>();
  if (k >= bound) throw ParseError(std::string(where) + ": index out of range");
  return k;
}

inline QiMatrix matrix(const Json& j, const char* where) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(where) + ": expected a non-empty row list");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  QiMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector v = vector(j[r], cols, where);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[c];
  }
  return m;
}

}  // namespace io_detail

inline Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// {dim, labels, structure: [[i, j, k, "v"], …], matrix_rep?: [matrix, …]}.
/// Triples list [e_i, e_j] coefficients for i < j; antisymmetry fills the rest.
inline Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  j["labels"] = g.labels();
  Json st = Json::array();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b)
      for (const auto& [k, z] : g.structure(a, b)) st.push_back(Json::array({a, b, k, qi::to_string(z)}));
  j["structure"] = st;
  if (g.has_matrix_rep()) {
    Json reps = Json::array();
    for (const auto& m : g.matrix_rep()) reps.push_back(matrix_json(m));
    j["matrix_rep"] = reps;
  }
  return j;
}

inline LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw ParseError("algebra: missing or invalid dim");
  const auto n = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != n) throw ParseError("algebra: labels must have dim entries");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("algebra: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) labels.push_back("e" + std::to_string(k + 1));
  }
  if (!j.contains("structure") || !j["structure"].is_array()) throw ParseError("algebra: missing structure list");
  std::vector<Vector> dense(n * n, Vector(n));
  for (const auto& t : j["structure"]) {
    if (!t.is_array() || t.size() != 4) throw ParseError("algebra: structure entries are [i, j, k, value]");
    std::size_t a = io_detail::index(t[0], n, "algebra structure");
    std::size_t b = io_detail::index(t[1], n, "algebra structure");
    std::size_t k = io_detail::index(t[2], n, "algebra structure");
    GaussianRational z = io_detail::value(t[3], "algebra structure");
    if (a == b) {
      if (!z.is_zero()) throw ParseError("algebra: [e_i, e_i] must vanish");
      continue;
    }
    std::size_t lo = std::min(a, b), hi = std::max(a, b);
    dense[lo * n + hi][k] += a < b ? z : -z;
  }
  std::vector<SparseVector> structure(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      structure[a * n + b] = qi::to_sparse(dense[a * n + b]);
      SparseVector neg = structure[a * n + b];
      for (auto& e : neg) e.second = -e.second;
      structure[b * n + a] = std::move(neg);
    }
  std::vector<QiMatrix> reps;
  if (j.contains("matrix_rep")) {
    if (!j["matrix_rep"].is_array() || j["matrix_rep"].size() != n)
      throw ParseError("algebra: matrix_rep must have dim matrices");
    for (const auto& m : j["matrix_rep"]) reps.push_back(io_detail::matrix(m, "algebra matrix_rep"));
    for (const auto& m : reps)
      if (!m.is_square() || m.rows() != reps[0].rows()) throw ParseError("algebra: matrix_rep must be square, same size");
  }
  try {
    LieAlgebra g(std::move(labels), std::move(structure), std::move(reps));
    if (find_jacobi_violation(g)) throw ParseError("algebra: structure constants violate the Jacobi identity");
    if (g.has_matrix_rep() && find_matrix_rep_violation(g))
      throw ParseError("algebra: matrix_rep does not realize the structure constants");
    return g;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }
}

/// Either a bare list of ambient vectors (complex span), or
/// {field_tag, rows} with rows in storage coordinates as written by subspace_json.
inline Subspace subspace_from_json(const Json& j, std::size_t ambient_dim) {
  if (j.is_array()) {
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(io_detail::vector(r, ambient_dim, "subspace row"));
    return Subspace::span(ambient_dim, rows);
  }
  if (!j.is_object() || !j.contains("rows")) throw ParseError("subspace: expected a row list or {field_tag, rows}");
  if (j.contains("ambient_dim") && j["ambient_dim"] != ambient_dim)
    throw ParseError("subspace: ambient_dim differs from the algebra dimension");
  std::string tag = j.value("field_tag", std::string("complex"));
  FieldTag field;
  if (tag == "complex")
    field = FieldTag::complex;
  else if (tag == "real-rational")
    field = FieldTag::real_rational;
  else
    throw ParseError("subspace: unknown field_tag " + tag);
  const std::size_t len = field == FieldTag::complex ? ambient_dim : 2 * ambient_dim;
  std::vector<SparseVector> rows;
  if (!j["rows"].is_array()) throw ParseError("subspace: rows must be an array");
  for (const auto& r : j["rows"]) rows.push_back(qi::to_sparse(io_detail::vector(r, len, "subspace row")));
  try {
    return Subspace::from_storage_rows(ambient_dim, field, rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("subspace: ") + e.what());
  }
}

}  // namespace subreg::lie
