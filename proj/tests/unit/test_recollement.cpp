#include "corpus.hpp"
#include "doctest.h"
#include "qha/recollement/scan.hpp"

using namespace qha;

namespace {

std::vector<ProjMap> corpus_sigma(const std::string& name, const AlgebraPtr& a) {
  return load_sigma(std::string(QHA_CORPUS_DIR) + "/" + name + ".map", a);
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> arrow_names(const AlgebraPtr& a, const std::vector<ArrowScan>& scans) {
  std::vector<std::string> out;
  for (const auto& s : scans) out.push_back(a->quiver().arrows[static_cast<std::size_t>(s.arrow)].name);
  return out;
}

}  // namespace

TEST_CASE("certifying homological epimorphisms as localisations") {
  auto triangle = corpus_algebra("triangle");
  auto f = universal_localise(triangle, corpus_sigma("gamma_star", triangle));
  auto cert = certify_universal_localisation(f);
  CHECK(cert.status == "certified");
  CHECK(cert.universal_localisation);
  CHECK(cert.g.has_value());
  CHECK_FALSE(cert.tor_witness.has_value());

  auto line_zero = corpus_algebra("line_zero");
  auto bad = certify_universal_localisation(localise_at_modules(line_zero, {projective(line_zero, 1)}));
  CHECK(bad.status == "NotOneFinite");
  CHECK(bad.flags.homological == Verdict::no);
  REQUIRE(bad.tor_witness.has_value());
  CHECK(*bad.tor_witness == 2);

  auto id = certify_universal_localisation(identity_epi(triangle));
  CHECK(id.status == "certified");
  CHECK(id.universal_localisation);
}

TEST_CASE("recollement from a finite arrow localisation") {
  auto a = corpus_algebra("two_cycle");
  auto rep = build_recollement(universal_localise(a, corpus_sigma("alpha_star", a)));
  REQUIRE(rep.built());
  CHECK(rep.f.b.dim() == 8);
  CHECK(rep.flags.finite);
  CHECK(rep.exceptional);
  CHECK(rep.resolution_check.all());
  CHECK(rep.end->ring.dim() == 1);
  CHECK(rep.omega_is_algebra_hom);
  CHECK(rep.omega_surjective);
  CHECK(rep.kernel_is_trace);
  CHECK(rep.iso_verified);
  CHECK(rep.trace->in_algebra.cols() == 6);
  CHECK(rep.nontrivial());
}

TEST_CASE("recollement from the injective gamma localisation") {
  auto a = corpus_algebra("triangle");
  auto rep = build_recollement(universal_localise(a, corpus_sigma("gamma_star", a)));
  REQUIRE(rep.built());
  CHECK_FALSE(rep.flags.finite);
  CHECK(rep.exceptional);
  CHECK(rep.omega_is_algebra_hom);
  // f is injective, so K_f ≅ coker(f)[-1] and E = End_A(coker f).
  const auto& coker = rep.f.cokernel.rep;
  CHECK(rep.end->ring.dim() == hom_space(coker, coker).size());
  CHECK_FALSE(rep.trace.has_value());
}

TEST_CASE("recollement from a surjective epimorphism") {
  auto a = corpus_algebra("line");
  auto qc = quotient_and_corner(a, {1});
  auto rep = build_recollement(qc.quotient);
  REQUIRE(rep.built());
  CHECK(rep.exceptional);
  // K_f ≅ ker(f)[1]; E is End_A(ker f), Morita equivalent to eAe.
  CHECK(rep.end->ring.dim() == hom_space(rep.f.kernel.rep, rep.f.kernel.rep).size());
  CHECK(rep.end->ring.is_associative());
  CHECK(rep.omega_is_algebra_hom);
}

TEST_CASE("failed hypotheses are data") {
  auto line_zero = corpus_algebra("line_zero");
  auto rep = build_recollement(localise_at_modules(line_zero, {projective(line_zero, 1)}));
  CHECK_FALSE(rep.built());
  CHECK(std::string(rep.verdict()) == "HypothesisFailed");
  CHECK(has(rep.failed, "one_finite"));
  CHECK(has(rep.failed, "homological"));

  auto diag = build_recollement(quotient_and_corner(line_zero, {1}).quotient);
  CHECK(has(diag.failed, "one_finite"));

  // beta* on the two-cycle: coker is S_2 and ker has S_2 in its socle.
  auto a = corpus_algebra("two_cycle");
  ProjMap beta_star = right_multiplication(a, LinComb{{Path::arrow(a->quiver(), 1), Scalar(1)}}, 0, 1, "beta_star");
  auto f = universal_localise(a, {beta_star});
  auto beta = build_recollement(f);
  CHECK(beta.hom_coker_ker == hom_space(f.cokernel.rep, f.kernel.rep).size());
  if (beta.resolution) CHECK(beta.shift_minus1 == beta.hom_coker_ker);
}

TEST_CASE("exceptionality matches Hom(coker f, ker f)") {
  std::vector<RingEpi> epis;
  auto two_cycle = corpus_algebra("two_cycle");
  auto triangle = corpus_algebra("triangle");
  auto line = corpus_algebra("line");
  auto cycle4 = corpus_algebra("cycle4");
  epis.push_back(universal_localise(two_cycle, corpus_sigma("alpha_star", two_cycle)));
  epis.push_back(universal_localise(triangle, corpus_sigma("gamma_star", triangle)));
  epis.push_back(identity_epi(cycle4));
  for (auto v : {0, 1, 2}) epis.push_back(quotient_and_corner(line, {v}).quotient);
  for (auto v : {0, 1}) epis.push_back(quotient_and_corner(two_cycle, {v}).quotient);
  for (const auto& f : epis) {
    auto rep = build_recollement(f);
    if (!rep.resolution) continue;
    CHECK(rep.shift_minus1 == rep.hom_coker_ker);
  }
}

TEST_CASE("arrow scan") {
  auto two_cycle = corpus_algebra("two_cycle");
  auto s = scan_arrows(two_cycle);
  CHECK(arrow_names(two_cycle, s) == std::vector<std::string>{"alpha"});
  CHECK(s[0].reflection_table);
  CHECK(s[0].matrix_form);
  CHECK(s[0].right_term_is_field);
  CHECK(s[0].report.iso_verified);

  auto line_zero = corpus_algebra("line_zero");
  CHECK(arrow_names(line_zero, scan_arrows(line_zero)) == std::vector<std::string>{"alpha"});
  CHECK_FALSE(arrow_conditions(line_zero, 1).no_relation_at_target);

  auto line = corpus_algebra("line");
  auto ls = scan_arrows(line);
  CHECK(arrow_names(line, ls) == std::vector<std::string>{"alpha", "beta"});
  for (const auto& x : ls) {
    CHECK(x.reflection_table);
    CHECK(x.matrix_form);
    CHECK(x.right_term_is_field);
  }

  auto cycle4 = corpus_algebra("cycle4");
  auto cs = scan_arrows(cycle4);
  CHECK(arrow_names(cycle4, cs) == std::vector<std::string>{"a1", "a2", "a4"});
  for (const auto& x : cs) {
    CHECK(x.reflection_table);
    CHECK(x.report.iso_verified);
  }

  CHECK(scan_arrows(corpus_algebra("point")).empty());
}

TEST_CASE("stratifying scan") {
  auto two_cycle = corpus_algebra("two_cycle");
  auto s = scan_stratifying(two_cycle, 8);
  REQUIRE(s.size() == 2);
  CHECK(s[1].vertices == std::vector<int>{1});
  CHECK(s[1].stratifying == Verdict::yes);
  CHECK(s[1].corner.dim() == 2);
  Mat rad = s[1].corner.radical();
  CHECK(rad.cols() == 1);
  CHECK(vec_is_zero(s[1].corner.multiply(rad.col(0), rad.col(0))));
  REQUIRE(s[1].report.has_value());
  CHECK(s[1].report->built());

  auto line_zero = corpus_algebra("line_zero");
  auto z = scan_stratifying(line_zero, 8);
  CHECK(z.size() == 6);
  for (const auto& x : z)
    if (x.vertices == std::vector<int>{1}) {
      CHECK(x.stratifying == Verdict::no);
      CHECK(x.flags.tor.at(1) == 1);
    }

  CHECK(scan_stratifying(corpus_algebra("point"), 4).empty());
  CHECK_THROWS_AS(scan_stratifying(two_cycle, 0), ValidationError);
}

TEST_CASE("derived simplicity witnesses") {
  CHECK_FALSE(derived_simplicity_witness(corpus_algebra("point")).has_value());
  auto w = derived_simplicity_witness(corpus_algebra("two_cycle"));
  REQUIRE(w.has_value());
  CHECK(w->provenance == Provenance::arrow);
  CHECK(w->label == "alpha");
  auto z = derived_simplicity_witness(corpus_algebra("line_zero"));
  REQUIRE(z.has_value());
  CHECK(z->label == "alpha");
  auto c = derived_simplicity_witness(corpus_algebra("cycle4"));
  REQUIRE(c.has_value());
  CHECK(c->report.end->ring.dim() == 1);
}
