// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include "subreg/ce/cohomology.hpp"
#include "subreg/g2/survey.hpp"
#include "subreg/lie/root_cut.hpp"
#include "subreg/qi/polynomial.hpp"
#include "subreg/so2n/theorem.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace subreg;
using lie::Subspace;
using qi::GaussianRational;
using qi::QiMatrix;
using qi::Vector;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

Outcome brackets() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n : {3, 4, 5}) {
    so2n::So2nIndex ix(n);
    auto g = so2n::build_so2n(n);
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) {
        Vector hp = g.basis_vector(ix.h(j)) + g.basis_vector(ix.h(k));
        Vector hm = g.basis_vector(ix.h(j)) - g.basis_vector(ix.h(k));
        o.require(g.bracket(g.basis_vector(ix.y(j, k)), g.basis_vector(ix.z(j, k))) == GaussianRational(4) * hp,
                  "[Y,Z] identity fails for n=" + std::to_string(n));
        o.require(g.bracket(g.basis_vector(ix.x(j, k)), g.basis_vector(ix.x(k, j))) == GaussianRational(4) * hm,
                  "[X_jk,X_kj] identity fails for n=" + std::to_string(n));
        checked += 2;
      }
  }
  if (o.ok) o.note = std::to_string(checked) + " identities over n = 3, 4, 5";
  return o;
}

Outcome so2n_end_to_end() {
  Outcome o;
  for (std::size_t n : {4, 6}) {
    so2n::So2nIndex ix(n);
    auto g = so2n::build_so2n(n);
    Subspace s = so2n::build_s(g, so2n::SubalgebraPreset::standard(n));
    auto r = so2n::theorem22_report(n, so2n::Form::lorentz);
    std::string tag = " (n=" + std::to_string(n) + ")";
    o.require(r.admissible.verified(), "admissible pair refuted" + tag);
    o.require(lie::subregular_codim(g, so2n::cartan(g, ix), s) == 1, "codimension differs from 1" + tag);
    o.require(r.nonregularity.verified(), "no non-regularity witness" + tag);
    std::string label = g.label(ix.x(n - 1, n));
    o.require(r.nonregularity.witness.value("nilpotent_part", lie::Json::object()) == lie::Json({{label, "1"}}),
              "nilpotent part is not " + label + tag);
    o.require(!s.contains(g.basis_vector(ix.x(n - 1, n))), label + " lies in s" + tag);
  }
  if (o.ok) o.note = "n = 4, 6: admissible, codim 1, nilpotent part X_{n-1,n}";
  return o;
}

Outcome real_points() {
  Outcome o;
  for (std::size_t n : {4, 6}) {
    auto g = so2n::build_so2n(n);
    Subspace s = so2n::build_s(g, so2n::SubalgebraPreset::standard(n));
    Subspace v = lie::real_points(so2n::build_tau_lorentz(g, n), s);
    o.require(v.dim() == n - 2, "dim_R(s ∩ g0) = " + std::to_string(v.dim()) + " for n=" + std::to_string(n));
    auto b = v.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        o.require(qi::is_zero(g.bracket(b[i], b[j])), "s ∩ g0 is not abelian for n=" + std::to_string(n));
  }
  if (o.ok) o.note = "dims 2 and 4, abelian";
  return o;
}

Outcome g2_cohomology() {
  Outcome o;
  auto g = g2::build_g2();
  Subspace b = g2::borel(g);
  o.require(ce::betti(g, b, 2) == 1, "betti(borel, 2) != 1");
  auto reps = ce::h2_representatives(g, b);
  Subspace bb = lie::bracket_span(g, b, b);
  if (reps.size() == 1) {
    auto basis = b.basis();
    for (const auto& x : basis)
      for (const auto& y : basis)
        if (bb.contains(x) || bb.contains(y))
          o.require(reps[0](x, y).is_zero(), "representative is nonzero on a monomial meeting [b,b]");
  }
  std::size_t lines = 0;
  for (const auto& l : g2::sample_lines()) {
    std::size_t k = ce::betti(g, g2::build_candidate(g, g2::CandidateKind::L_plus_n, l), 2);
    o.require(k == 0, "betti(L+n, 2) != 0 on a sampled line");
    ++lines;
  }
  o.require(lines >= 3, "fewer than 3 sampled lines");
  if (o.ok) o.note = "betti(b,2) = 1; betti(L+n,2) = 0 on " + std::to_string(lines) + " lines";
  return o;
}

Outcome g2_survey() {
  Outcome o;
  auto g = g2::build_g2();
  auto certs = g2::survey(g, g2::Form::compact);
  std::set<std::string> capable;
  for (const auto& c : certs) {
    if (c.verified())
      capable.insert(c.witness["kind"].get<std::string>());
    else
      o.require(c.status == lie::Status::refuted && !c.details.empty(), "unrecorded refutation reason");
  }
  o.require(certs.size() == 7, "survey does not cover 7 kinds");
  o.require(capable == std::set<std::string>{"L_plus_n", "borel"}, "capable set differs from {L_plus_n, borel}");
  o.require(certs.size() > 1 && certs[1].witness["closed_forms"]["condition"] == "Im(c) ≠ 0",
            "borel verdict is not \"Im(c) ≠ 0\"");
  if (o.ok) o.note = "capable {L_plus_n, borel}; borel: Im(c) ≠ 0";
  return o;
}

Outcome compact_consistency() {
  Outcome o;
  so2n::So2nIndex ix(4);
  auto so8 = so2n::build_so2n(4);
  auto c1 = lie::compact_root_cut_fixed(so8, so2n::build_tau_compact(so8, 4), so2n::cartan(so8, ix));
  o.require(c1.verified(), "so(8): " + c1.details);
  auto g = g2::build_g2();
  auto c2 = lie::compact_root_cut_fixed(g, g2::build_tau_g2(g2::Form::compact), g2::cartan(g));
  o.require(c2.verified(), "G2: " + c2.details);
  auto r = so2n::theorem22_report(4, so2n::Form::compact);
  o.require(r.admissible.status == lie::Status::refuted, "so(8) subalgebra admissible under compact tau");
  auto s3 = g2::admissibility_capability(g, g2::build_tau_g2(g2::Form::compact), g2::build_s3(g), "s3");
  o.require(s3.status == lie::Status::refuted, "G2 s3 admissible under compact tau");
  if (o.ok)
    o.note = std::to_string(c1.witness["cuts_checked"].get<std::size_t>()) + " + " +
             std::to_string(c2.witness["cuts_checked"].get<std::size_t>()) + " cuts stable; subalgebras refuted";
  return o;
}

Outcome invariants() {
  Outcome o;
  auto so8 = so2n::build_so2n(4);
  auto g = g2::build_g2();
  o.require(!lie::find_jacobi_violation(so8), "Jacobi fails on so(8)");
  o.require(!lie::find_jacobi_violation(g), "Jacobi fails on G2");

  auto so12 = so2n::build_so2n(6);
  std::vector<std::pair<const lie::LieAlgebra*, Subspace>> subs;
  subs.emplace_back(&so8, so2n::build_s(so8, so2n::SubalgebraPreset::standard(4)));
  subs.emplace_back(&so12, so2n::build_s(so12, so2n::SubalgebraPreset::standard(6)));
  for (auto k : g2::all_kinds) {
    if (k == g2::CandidateKind::L_plus_n)
      for (const auto& l : g2::sample_lines()) subs.emplace_back(&g, g2::build_candidate(g, k, l));
    else
      subs.emplace_back(&g, g2::build_candidate(g, k));
  }
  subs.emplace_back(&g, g2::build_s3(g));
  for (const auto& [alg, s] : subs) {
    try {
      ce::summarize(lie::restrict_to(*alg, s));  // throws if d∘d != 0
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
  }

  std::mt19937 gen(8);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 8);
  int jc = 0;
  for (; jc < 100; ++jc) {
    auto n = static_cast<std::size_t>(size(gen));
    QiMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (jc % 2 == 0 || j >= i) m(i, j) = GaussianRational(entry(gen), entry(gen) * (jc % 3 == 0));
    if (jc % 2 == 1)  // triangular with few distinct eigenvalues
      for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(i % 2, 0);
    auto d = qi::jordan_chevalley(m);
    o.require(d.semisimple + d.nilpotent == m, "JC parts do not reassemble");
    o.require(d.semisimple * d.nilpotent == d.nilpotent * d.semisimple, "JC parts do not commute");
    o.require(qi::is_nilpotent(d.nilpotent), "JC nilpotent part is not nilpotent");
    auto mp = qi::minimal_polynomial(d.semisimple);
    o.require(qi::squarefree_part(mp).monic() == mp, "JC semisimple part is not semisimple");
  }
  if (o.ok)
    o.note = "Jacobi on so(8) and G2; d∘d = 0 on " + std::to_string(subs.size()) + " subalgebras; " +
             std::to_string(jc) + " JC decompositions";
  return o;
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const std::string cli = SUBREG_CLI;
  const std::string tmp = "acceptance_bundle_";
  auto run = [&](const std::string& args, const std::string& out) {
    std::string cmd = cli + " " + args + " --out " + out + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  for (const auto& [args, code] : std::vector<std::pair<std::string, int>>{{"verify-so2n --n 4", 0},
                                                                            {"g2-survey --form compact", 1}}) {
    int a = run(args, tmp + "a.json"), b = run(args, tmp + "b.json");
    o.require(a == code && b == code, "unexpected exit status for " + args);
    std::string x = slurp(tmp + "a.json"), y = slurp(tmp + "b.json");
    o.require(!x.empty() && x == y, "bundles differ for " + args);
  }
  std::remove((tmp + "a.json").c_str());
  std::remove((tmp + "b.json").c_str());
  if (o.ok) o.note = "byte-identical bundles";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bracket identities in so(2n), n = 3..5", brackets},
      {"so(2n) admissible pair, codimension 1, non-regular (n = 4, 6)", so2n_end_to_end},
      {"real points of s are abelian of dimension n-2", real_points},
      {"G2 second cohomology of b and L+n", g2_cohomology},
      {"G2 compact survey", g2_survey},
      {"compact-form consistency (root cuts, refuted subalgebras)", compact_consistency},
      {"structural invariants (Jacobi, d∘d, Jordan-Chevalley)", invariants},
      {"deterministic CLI bundles", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << " -- " << o.note << " ("
              << static_cast<int>(secs * 10) / 10.0 << "s)" << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
