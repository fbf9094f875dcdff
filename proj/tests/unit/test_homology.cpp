#include "corpus.hpp"
#include "doctest.h"
#include "qha/homology/tor.hpp"
#include "qha/localisation/ring_epi.hpp"
#include "qha/modcat/tensor.hpp"

using namespace qha;

namespace {

std::vector<ProjMap> corpus_sigma(const std::string& name, const AlgebraPtr& a) {
  return load_sigma(std::string(QHA_CORPUS_DIR) + "/" + name + ".map", a);
}

// Tor computed from a resolution of the left argument instead of the right.
std::size_t tor_by_left(const Representation& right, const Representation& left, std::size_t i) {
  ResolutionReport r = resolve(left, i + 2);
  std::vector<TensorProduct> t;
  for (const auto& term : r.terms) t.push_back(tensor(right, term.rep()));
  if (i >= t.size()) return 0;
  std::size_t out = t[i].dim();
  if (i >= 1) out -= rank(tensor_map_left(t[i], t[i - 1], r.differentials[i]));
  if (i + 1 < t.size()) out -= rank(tensor_map_left(t[i + 1], t[i], r.differentials[i + 1]));
  return out;
}

}  // namespace

TEST_CASE("Tor in low degrees") {
  auto a = corpus_algebra("line_zero");
  auto op = a->opposite();
  for (int i = 0; i < a->vertex_count(); ++i) {
    auto n = simple(a, i);
    auto m = simple(op, i);
    CHECK(tor(m, n, 0) == tensor(m, n).dim());
    for (int k = 0; k < a->vertex_count(); ++k) CHECK(tor(simple(op, k), projective(a, i), 1) == 0);
  }
  CHECK_THROWS_AS(tor(simple(op, 0), simple(a, 0), 5, 4), CapExceeded);

  auto loc = localise_at_modules(a, {projective(a, 1)});
  CHECK(tor(loc.b_right, loc.b_mod, 1) == 0);
  CHECK(tor(loc.b_right, loc.b_mod, 2) == 1);
  CHECK(tor(loc.b_right, loc.b_mod, 3) == 0);
}

TEST_CASE("Tor is balanced") {
  for (const char* name : {"line_zero", "triangle", "two_cycle", "cycle4"}) {
    auto a = corpus_algebra(name);
    auto op = a->opposite();
    std::vector<Representation> lefts, rights;
    for (int i = 0; i < a->vertex_count(); ++i) {
      lefts.push_back(simple(a, i));
      rights.push_back(simple(op, i));
      rights.push_back(projective(op, i));
    }
    for (const auto& m : rights)
      for (const auto& n : lefts)
        for (std::size_t i = 0; i <= 3; ++i) CHECK(tor(m, n, i) == tor_by_left(m, n, i));
  }
}

TEST_CASE("P_f for the gamma localisation") {
  auto triangle = corpus_algebra("triangle");
  auto f = universal_localise(triangle, corpus_sigma("gamma_star", triangle));
  auto r = build_Kf_resolution(f.a_sum, f.f_mod);
  CHECK(r.p1_summands > 0);
  auto check = verify_resolution(r);
  CHECK(check.chain_map);
  CHECK(check.h_minus1);
  CHECK(check.h_zero);
  CHECK(check.ses_exact);
  auto kg = kernel_cokernel(r.pf.differential);
  CHECK(kg.kernel.rep.is_zero());
  CHECK(kg.cokernel.rep.total_dim() == 4);

  // Hom_K(P_f, K_f[-1]) = Hom(coker f, ker f) = 0; the +1 shift vanishes too.
  CHECK(homotopy_hom(r.pf, r.kf, -1).dim == 0);
  CHECK(homotopy_hom(r.pf, r.kf, 1).dim == 0);
  CHECK(homotopy_hom(r.pf, r.kf, 2).dim == 0);

  // End_{D(A)}(K_f) = End_A(coker f) since f is injective.
  auto end = homotopy_end_ring(r.pf);
  CHECK(end.space.dim == hom_space(f.cokernel.rep, f.cokernel.rep).size());
  CHECK(homotopy_hom(r.pf, r.kf, 0).dim == end.space.dim);
}

TEST_CASE("P_f in the finite and surjective cases") {
  auto two_cycle = corpus_algebra("two_cycle");
  auto f = universal_localise(two_cycle, corpus_sigma("alpha_star", two_cycle));
  auto r = build_Kf_resolution(f.a_sum, f.f_mod);
  CHECK(r.p1_summands == 0);
  CHECK(verify_resolution(r).all());
  CHECK(homotopy_hom(r.pf, r.kf, 1).dim == 0);
  CHECK(homotopy_hom(r.pf, r.kf, -1).dim == hom_space(f.cokernel.rep, f.kernel.rep).size());
  CHECK(homotopy_end_ring(r.pf).ring.dim() == 1);

  auto id = identity_epi(two_cycle);
  auto rid = build_Kf_resolution(id.a_sum, id.f_mod);
  CHECK(verify_resolution(rid).all());
  for (int s : {-1, 0, 1}) CHECK(homotopy_hom(rid.pf, rid.kf, s).dim == 0);
  CHECK(homotopy_end_ring(rid.pf).ring.dim() == 0);

  auto line = corpus_algebra("line");
  auto q = quotient_and_corner(line, {1}).quotient;
  auto rq = build_Kf_resolution(q.a_sum, q.f_mod);
  CHECK(verify_resolution(rq).all());
  // K_f ≅ ker(f)[1]
  CHECK(homotopy_end_ring(rq.pf).ring.dim() == hom_space(q.kernel.rep, q.kernel.rep).size());

  auto a = corpus_algebra("line_zero");
  auto bad = quotient_and_corner(a, {1}).quotient;
  CHECK_THROWS_AS(build_Kf_resolution(bad.a_sum, bad.f_mod), HypothesisError);
}

TEST_CASE("independently built P_f agree") {
  auto triangle = corpus_algebra("triangle");
  auto f = universal_localise(triangle, corpus_sigma("gamma_star", triangle));
  auto r1 = build_Kf_resolution(f.a_sum, f.f_mod);
  // A second model from the extracted map g, localised again.
  auto g = universal_localise(triangle, {extract_sigma(f).g});
  auto r2 = build_Kf_resolution(g.a_sum, g.f_mod);
  for (int s : {-1, 0, 1}) CHECK(homotopy_hom(r1.pf, r1.kf, s).dim == homotopy_hom(r2.pf, r2.kf, s).dim);
}
