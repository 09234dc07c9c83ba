// Command-line front end: writes certificate bundles as JSON.
#include "subreg/ce/cohomology.hpp"
#include "subreg/g2/survey.hpp"
#include "subreg/lie/json_io.hpp"
#include "subreg/lie/structure.hpp"
#include "subreg/so2n/theorem.hpp"

#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using subreg::lie::Certificate;
using subreg::lie::Json;
using subreg::lie::LieAlgebra;
using subreg::lie::ParseError;
using subreg::lie::Status;
using subreg::lie::Subspace;
using subreg::qi::Vector;

constexpr const char* kToolVersion = "0.1.0";

enum Exit { ok = 0, refuted = 1, usage = 2 };

struct Bundle {
  std::string command;
  Json inputs = Json::object();
  std::vector<Certificate> certificates;

  std::string overall() const {
    std::size_t good = 0;
    for (const auto& c : certificates) good += c.verified();
    if (!certificates.empty() && good == certificates.size()) return "verified";
    return good == 0 ? "refuted" : "mixed";
  }

  Json to_json() const {
    Json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    Json certs = Json::array();
    for (const auto& c : certificates) certs.push_back(c.to_json());
    j["certificates"] = certs;
    j["overall"] = overall();
    return j;
  }
};

void write_json(const Json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + out);
  f << text;
}

int emit(const Bundle& b, const std::string& out) {
  write_json(b.to_json(), out);
  std::cerr << b.command << ": " << b.overall() << "\n";
  return b.overall() == "verified" ? ok : refuted;
}

Vector h_coords(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(std::string("preset: ") + what + " must have " + std::to_string(n) + " entries");
  Vector v(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!j[k].is_string()) throw ParseError(std::string("preset: ") + what + " entries are value strings");
    try {
      v[k] = subreg::qi::parse_gaussian(j[k].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("preset: ") + e.what());
    }
  }
  return v;
}

subreg::so2n::SubalgebraPreset read_preset(const std::string& path, std::size_t n) {
  Json j = subreg::lie::parse_json_file(path);
  if (!j.is_object() || !j.contains("n") || !j.contains("L_basis") || !j.contains("H"))
    throw ParseError("preset: expected {n, L_basis, H}");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(n))
    throw ParseError("preset: n differs from --n");
  subreg::so2n::SubalgebraPreset p;
  p.n = n;
  if (!j["L_basis"].is_array()) throw ParseError("preset: L_basis must be an array");
  for (const auto& v : j["L_basis"]) p.l_basis.push_back(h_coords(v, n, "L_basis vector"));
  p.h = h_coords(j["H"], n, "H");
  try {
    subreg::so2n::validate(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return p;
}

Json preset_json(const subreg::so2n::SubalgebraPreset& p) {
  Json j;
  j["n"] = p.n;
  Json l = Json::array();
  for (const auto& v : p.l_basis) l.push_back(subreg::lie::vector_json(v));
  j["L_basis"] = l;
  j["H"] = subreg::lie::vector_json(p.h);
  return j;
}

int cmd_verify_so2n(long n, const std::string& preset_file, const std::string& form, const std::string& out) {
  namespace so = subreg::so2n;
  if (n < 3) throw ParseError("--n must be at least 3");
  auto un = static_cast<std::size_t>(n);
  so::Form f = form == "compact" ? so::Form::compact : so::Form::lorentz;
  so::SubalgebraPreset p = preset_file.empty() ? so::SubalgebraPreset::standard(un) : read_preset(preset_file, un);

  Bundle b;
  b.command = "verify-so2n";
  b.inputs["n"] = un;
  b.inputs["form"] = form;
  b.inputs["preset"] = preset_json(p);
  b.inputs["preset_source"] = preset_file.empty() ? "default" : "file";
  so::Theorem22Report r = so::theorem22_report(un, f, p);
  if (f == so::Form::lorentz && un % 2 == 0)
    b.certificates.push_back(so::theorem22_certificate(r, un));
  else
    b.certificates = r.certificates();
  return emit(b, out);
}

Certificate parametrization_certificate(const LieAlgebra& g, subreg::g2::Form f) {
  Json pc = subreg::g2::parametrization_constants(g, f);
  bool ok = pc["dim_hom_bb"] == 6 && pc["sigma0_condition"] == "Im(c) ≠ 0";
  Certificate c{"borel: dim Hom([b,b], C) = 6 and c*omega0 is non-degenerate on h0 iff Im(c) ≠ 0",
                subreg::lie::status_of(ok), pc, ok ? "as claimed" : "constants differ"};
  return c;
}

int cmd_g2_survey(const std::string& form, const std::string& out) {
  namespace g2 = subreg::g2;
  g2::Form f = form == "split" ? g2::Form::split : g2::Form::compact;
  LieAlgebra g = g2::build_g2();
  Bundle b;
  b.command = "g2-survey";
  b.inputs["form"] = form;
  b.certificates = g2::survey(g, f);

  Certificate s3 = g2::admissibility_capability(g, g2::build_tau_g2(f), g2::build_s3(g), "s3");
  s3.witness["kind"] = "s3";
  b.certificates.push_back(std::move(s3));

  std::size_t bb = subreg::ce::betti(g, g2::borel(g), 2);
  Certificate hb{"betti(borel, 2) = 1", subreg::lie::status_of(bb == 1), Json::object(),
                 "dim H^2 = " + std::to_string(bb)};
  hb.witness["betti2"] = bb;
  b.certificates.push_back(std::move(hb));

  bool all_zero = true;
  Json lines = Json::array();
  for (const auto& line : g2::sample_lines()) {
    std::size_t k = subreg::ce::betti(g, g2::build_candidate(g, g2::CandidateKind::L_plus_n, line), 2);
    all_zero = all_zero && k == 0;
    Json e;
    e["line"] = subreg::lie::vector_json(line);
    e["betti2"] = k;
    lines.push_back(e);
  }
  Certificate hl{"betti(L_plus_n, 2) = 0 on every sampled line", subreg::lie::status_of(all_zero), Json::object(),
                 all_zero ? "H^2 vanishes" : "some sampled line has H^2 != 0"};
  hl.witness["lines"] = lines;
  b.certificates.push_back(std::move(hl));

  b.certificates.push_back(parametrization_certificate(g, f));
  return emit(b, out);
}

LieAlgebra read_algebra(const std::string& path) { return subreg::lie::algebra_from_json(subreg::lie::parse_json_file(path)); }

Subspace read_subspace(const std::string& path, std::size_t dim) {
  return subreg::lie::subspace_from_json(subreg::lie::parse_json_file(path), dim);
}

int cmd_subregular(const std::string& alg, const std::string& sub, const std::string& cart, const std::string& out) {
  namespace lie = subreg::lie;
  LieAlgebra g = read_algebra(alg);
  Subspace s = read_subspace(sub, g.dim());
  Subspace h = read_subspace(cart, g.dim());
  if (!s.is_complex() || !h.is_complex()) throw ParseError("subalgebra and Cartan must be complex subspaces");

  Bundle b;
  b.command = "subregular";
  b.inputs["algebra"] = alg;
  b.inputs["subalgebra"] = lie::subspace_json(s);
  b.inputs["cartan"] = lie::subspace_json(h);

  Certificate closure = lie::is_subalgebra(g, s);
  b.certificates.push_back(closure);
  Certificate hc = lie::is_subalgebra(g, h);
  bool abelian = hc.verified() && lie::bracket_span(g, h, h).dim() == 0;
  Certificate ab{"the given Cartan is an abelian subalgebra", lie::status_of(abelian), Json::object(),
                 abelian ? "all brackets vanish" : "some bracket is nonzero"};
  ab.witness["dim"] = h.dim();
  b.certificates.push_back(ab);
  if (!closure.verified() || !abelian) return emit(b, out);

  Subspace norm = lie::normalizer_in(g, h, s);
  std::size_t codim = h.dim() - norm.dim();
  Certificate c{"s is normalized by a codimension-" + std::to_string(codim) + " subalgebra of the given Cartan",
                Status::verified, Json::object(), "subregular codimension " + std::to_string(codim)};
  c.witness["codimension"] = codim;
  c.witness["cartan_dim"] = h.dim();
  Json nb = Json::array();
  for (const auto& x : norm.basis()) nb.push_back(lie::labeled_vector_json(g.labels(), x));
  c.witness["normalizer_basis"] = nb;
  b.certificates.push_back(c);
  if (g.has_matrix_rep()) b.certificates.push_back(lie::nonregularity_certificate(g, s));
  return emit(b, out);
}

int cmd_cohomology(const std::string& alg, const std::string& sub, long degree, const std::string& out) {
  namespace lie = subreg::lie;
  namespace ce = subreg::ce;
  if (degree < 0 || degree > 2) throw ParseError("--degree must be 0, 1 or 2");
  auto k = static_cast<std::size_t>(degree);
  LieAlgebra g = read_algebra(alg);
  Subspace s = read_subspace(sub, g.dim());
  if (!s.is_complex()) throw ParseError("subalgebra must be a complex subspace");

  Bundle b;
  b.command = "cohomology";
  b.inputs["algebra"] = alg;
  b.inputs["subalgebra"] = lie::subspace_json(s);
  b.inputs["degree"] = k;
  Certificate closure = lie::is_subalgebra(g, s);
  if (!closure.verified()) {
    b.certificates.push_back(closure);
    return emit(b, out);
  }
  LieAlgebra restricted = lie::restrict_to(g, s);
  auto reps = ce::cohomology_cochains(restricted, k);
  Certificate c{"dim H^" + std::to_string(k) + "(s, C) = " + std::to_string(reps.size()), Status::verified,
                Json::object(), ""};
  c.witness["betti"] = reps.size();
  c.witness["summary"] = ce::summarize(restricted).to_json();
  c.witness["basis_labels"] = restricted.labels();
  Json rj = Json::array();
  for (const auto& r : reps) rj.push_back(ce::cochain_json(restricted, k, r));
  c.witness["representatives"] = rj;
  c.details = "representatives are cochains modulo exact ones, in the listed basis of s";
  b.certificates.push_back(std::move(c));
  return emit(b, out);
}

std::optional<Vector> parse_line(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--line expects a,b");
  try {
    return Vector{subreg::qi::parse_gaussian(text.substr(0, comma)), subreg::qi::parse_gaussian(text.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("--line: ") + e.what());
  }
}

// Writes raw algebra or subspace JSON for use as subregular/cohomology input.
int cmd_export(const std::string& family, long n, const std::string& object, const std::string& kind,
               const std::string& line, const std::string& out) {
  namespace lie = subreg::lie;
  if (family == "so2n") {
    if (n < 3) throw ParseError("--n must be at least 3");
    auto un = static_cast<std::size_t>(n);
    subreg::so2n::So2nIndex ix(un);
    LieAlgebra g = subreg::so2n::build_so2n(un);
    if (object == "algebra")
      write_json(lie::algebra_to_json(g), out);
    else if (object == "cartan")
      write_json(lie::subspace_json(subreg::so2n::cartan(g, ix)), out);
    else if (object == "s")
      write_json(lie::subspace_json(subreg::so2n::build_s(g, subreg::so2n::SubalgebraPreset::standard(un))), out);
    else
      throw ParseError("so2n objects: algebra, cartan, s");
    return ok;
  }
  namespace g2 = subreg::g2;
  LieAlgebra g = g2::build_g2();
  if (object == "algebra") {
    // carry the adjoint representation so matrix-based checks apply
    std::vector<subreg::qi::QiMatrix> ads;
    for (std::size_t k = 0; k < g.dim(); ++k) ads.push_back(g.ad(g.basis_vector(k)));
    LieAlgebra with_rep(g.labels(), [&] {
      std::vector<subreg::qi::SparseVector> st;
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) st.push_back(g.structure(i, j));
      return st;
    }(), ads);
    write_json(lie::algebra_to_json(with_rep), out);
  } else if (object == "cartan") {
    write_json(lie::subspace_json(g2::cartan(g)), out);
  } else if (object == "s3") {
    write_json(lie::subspace_json(g2::build_s3(g)), out);
  } else if (object == "candidate") {
    g2::CandidateKind k;
    try {
      k = g2::parse_kind(kind);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    auto l = parse_line(line);
    if (k == g2::CandidateKind::L_plus_n && !l) throw ParseError("L_plus_n needs --line");
    write_json(lie::subspace_json(g2::build_candidate(g, k, l)), out);
  } else {
    throw ParseError("g2 objects: algebra, cartan, s3, candidate");
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of subregular subalgebras and admissible pairs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  long n = 0, degree = 2;
  std::string preset, form, out, algebra, subalgebra, cartan_file, family, object, kind, line;

  auto* so = app.add_subcommand("verify-so2n", "Admissibility, codimension and non-regularity for so(2n)");
  so->add_option("--n", n, "rank n (at least 3)")->required();
  so->add_option("--preset", preset, "JSON file {n, L_basis, H} in H-coordinates");
  form = "lorentz";
  so->add_option("--form", form, "real form")->check(CLI::IsMember({"lorentz", "compact"}));
  so->add_option("--out", out, "output file (default stdout)");

  std::string g2_form = "compact";
  auto* gs = app.add_subcommand("g2-survey", "Candidate survey for G2");
  gs->add_option("--form", g2_form, "real form")->check(CLI::IsMember({"compact", "split"}));
  gs->add_option("--out", out, "output file (default stdout)");

  auto* sr = app.add_subcommand("subregular", "Subregular codimension w.r.t. a given Cartan");
  sr->add_option("--algebra", algebra, "algebra JSON")->required();
  sr->add_option("--subalgebra", subalgebra, "subspace JSON")->required();
  sr->add_option("--cartan", cartan_file, "subspace JSON")->required();
  sr->add_option("--out", out, "output file (default stdout)");

  auto* co = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology of a subalgebra");
  co->add_option("--algebra", algebra, "algebra JSON")->required();
  co->add_option("--subalgebra", subalgebra, "subspace JSON")->required();
  co->add_option("--degree", degree, "degree 0..2");
  co->add_option("--out", out, "output file (default stdout)");

  family = "so2n";
  n = 0;
  auto* ex = app.add_subcommand("export", "Write algebra or subspace JSON inputs");
  ex->add_option("--family", family, "so2n or g2")->check(CLI::IsMember({"so2n", "g2"}));
  ex->add_option("--n", n, "rank for so2n");
  ex->add_option("--object", object, "algebra, cartan, s, s3 or candidate")->required();
  ex->add_option("--kind", kind, "candidate kind for g2");
  ex->add_option("--line", line, "a,b: the line C(a H_alpha + b H_beta)");
  ex->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*so) return cmd_verify_so2n(n, preset, form, out);
    if (*gs) return cmd_g2_survey(g2_form, out);
    if (*sr) return cmd_subregular(algebra, subalgebra, cartan_file, out);
    if (*co) return cmd_cohomology(algebra, subalgebra, degree, out);
    if (*ex) return cmd_export(family, n, object, kind, line, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
