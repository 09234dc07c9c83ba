#pragma once

#include "subreg/lie/antiinvolution.hpp"
#include "subreg/lie/certificate.hpp"
#include "subreg/lie/subalgebra.hpp"
#include "subreg/lie/two_form.hpp"

#include <string>

namespace subreg::lie {

/// s + τ(s) = g.
inline Certificate sum_condition(const LieAlgebra& g, const Antiinvolution& t, const Subspace& s) {
  Subspace ts = apply_tau(t, s);
  Subspace total = sum(s, ts);
  Certificate c{"s + tau(s) = g", status_of(total.dim() == g.dim()), Json::object(), ""};
  c.witness["dim_s"] = s.dim();
  c.witness["dim_sum"] = total.dim();
  c.witness["dim_g"] = g.dim();
  c.witness["dim_intersection"] = intersect(s, ts).dim();
  c.details = c.verified() ? "the sum is the whole algebra"
                           : "the sum has dimension " + std::to_string(total.dim()) + " < " + std::to_string(g.dim());
  return c;
}

/// Conditions checked in order: subalgebra, closed form, s + τs = g,
/// non-degeneracy of Im(ω) on the real points of s. The witness lists every
/// evaluated sub-certificate; the status is that of the first failure.
inline Certificate check_admissible_pair(const LieAlgebra& g, const Antiinvolution& t, const Subspace& s,
                                         const TwoForm& w) {
  Certificate out{"(s, omega) is an admissible pair", Status::verified, Json::object(), ""};
  Json conditions = Json::array();
  auto record = [&](const std::string& name, const Certificate& c) {
    Json j = c.to_json();
    j["condition"] = name;
    conditions.push_back(j);
    if (!c.verified() && out.verified()) {
      out.status = c.status;
      out.witness["failed_condition"] = name;
      out.details = "fails: " + c.claim;
    }
  };
  if (!(w.domain == s)) throw std::invalid_argument("two-form is not defined on the given subalgebra");
  Certificate sub = is_subalgebra(g, s);
  record("subalgebra", sub);
  if (sub.verified()) record("closed", is_closed(g, w));
  record("sum", sum_condition(g, t, s));
  Subspace v = real_points(t, s);
  Certificate nd = is_nondegenerate(restrict_im(w, v));
  nd.claim = "Im(omega) is non-degenerate on the real points of s";
  nd.witness["real_points"] = subspace_json(v);
  record("nondegenerate", nd);
  out.witness["conditions"] = conditions;
  if (out.verified()) out.details = "all four conditions hold";
  return out;
}

}  // namespace subreg::lie
