#pragma once

#include "subreg/lie/subspace.hpp"
#include "subreg/qi/gaussian_rational.hpp"
#include "subreg/qi/matrix.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace subreg::lie {

using Json = nlohmann::ordered_json;

enum class Status { verified, refuted, infeasible };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::infeasible: return "infeasible";
  }
  return "infeasible";
}

inline Status parse_status(const std::string& s) {
  if (s == "verified") return Status::verified;
  if (s == "refuted") return Status::refuted;
  if (s == "infeasible") return Status::infeasible;
  throw std::invalid_argument("unknown certificate status " + s);
}

struct Certificate {
  std::string claim;
  Status status = Status::infeasible;
  Json witness = Json::object();
  std::string details;

  bool verified() const { return status == Status::verified; }

  Json to_json() const {
    Json j;
    j["claim"] = claim;
    j["status"] = to_string(status);
    j["witness"] = witness;
    j["details"] = details;
    return j;
  }

  static Certificate from_json(const Json& j) {
    return {j.at("claim").get<std::string>(), parse_status(j.at("status").get<std::string>()),
            j.value("witness", Json::object()), j.value("details", std::string())};
  }
};

inline Status status_of(bool ok) { return ok ? Status::verified : Status::refuted; }

// ---------------------------------------------------------------------------
// Witness encoders. Value strings follow the Gaussian-rational grammar.

inline Json value_json(const GaussianRational& z) { return qi::to_string(z); }

inline Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(qi::to_string(z));
  return a;
}

/// Nonzero coordinates keyed by basis label, in basis order.
inline Json labeled_vector_json(const std::vector<std::string>& labels, const Vector& v) {
  Json o = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) o[labels.at(k)] = qi::to_string(v[k]);
  return o;
}

inline Json matrix_json(const QiMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row_vector(r)));
  return rows;
}

inline Json subspace_json(const Subspace& s) {
  Json j;
  j["field_tag"] = to_string(s.field());
  j["ambient_dim"] = s.ambient_dim();
  Json rows = Json::array();
  for (const auto& r : s.storage_rows()) rows.push_back(vector_json(qi::to_dense(r, s.coordinate_length())));
  j["rows"] = rows;
  return j;
}

}  // namespace subreg::lie
