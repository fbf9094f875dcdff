#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "qha/error.hpp"
#include "qha/modcat/module_file.hpp"
#include "qha/modcat/projectives.hpp"
#include "qha/modcat/tensor.hpp"

using namespace qha;

namespace {

Vec element(const AlgebraPtr& a, const std::string& s) {
  return a->coordinates(parse_lincomb(a->quiver(), a->field(), s));
}

// Right multiplication by a path x: P_j → P_i, sending e_j to x (x runs i → j).
ModuleMap right_mult(const AlgebraPtr& a, int j, int i, const std::string& x) {
  Representation pj = projective(a, j), pi = projective(a, i);
  Vec img(pi.dim(j));
  Vec coords = element(a, x);
  const auto& words = a->words_between(i, j);
  for (std::size_t r = 0; r < words.size(); ++r) img[r] = coords[words[r]];
  return map_from_projective(pj, j, pi, img);
}

// A/AeA as a left module, for e a sum of vertex idempotents.
Quotient idempotent_quotient(const AlgebraPtr& a, const std::vector<int>& vertices) {
  RegularModule reg = regular_module(a);
  std::vector<Vec> gens;
  for (int v : vertices) gens.push_back(a->algebra().basis_vector(a->vertex_index(v)));
  Mat ideal = a->algebra().ideal_generated_by(gens);
  std::vector<Vec> in_module;
  for (std::size_t c = 0; c < ideal.cols(); ++c) in_module.push_back(reg.from_algebra * ideal.col(c));
  return quotient(reg.rep, generated_subspaces(reg.rep, in_module));
}

// Number of module maps M → N over F_p by exhaustive enumeration.
std::size_t count_maps(const Representation& m, const Representation& n, std::uint64_t p) {
  std::size_t unknowns = 0;
  for (int v = 0; v < m.vertex_count(); ++v) unknowns += m.dim(v) * n.dim(v);
  REQUIRE(unknowns <= 14);
  std::size_t total = 1;
  for (std::size_t k = 0; k < unknowns; ++k) total *= p;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    ModuleMap h = ModuleMap::zero(m, n);
    std::size_t c = code;
    for (auto& comp : h.components)
      for (std::size_t r = 0; r < comp.rows(); ++r)
        for (std::size_t s = 0; s < comp.cols(); ++s, c /= p) comp(r, s) = static_cast<long long>(c % p);
    if (h.commutes()) ++count;
  }
  return count;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("indecomposable projectives") {
  auto line_zero = corpus_algebra("line_zero");
  CHECK(projective(line_zero, 0).dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK(projective(corpus_algebra("triangle"), 0).total_dim() == 3);
  auto two_cycle = corpus_algebra("two_cycle");
  CHECK(projective(two_cycle, 1).total_dim() == 3);
  CHECK(projective(two_cycle, 0).total_dim() == 4);
}

TEST_CASE("hom spaces") {
  auto two_cycle = corpus_algebra("two_cycle");
  auto p1 = projective(two_cycle, 0);
  CHECK(hom_space(p1, p1).size() == 2);
  auto line_zero = corpus_algebra("line_zero");
  CHECK(hom_space(simple(line_zero, 0), projective(line_zero, 1)).empty());
  CHECK(hom_space(p1, Representation::zero(two_cycle)).empty());
  CHECK_THROWS_AS(hom_space(p1, projective(line_zero, 0)), ValidationError);

  // Yoneda: dim Hom(P_i, M) = dim e_i M.
  for (const char* name : {"line_zero", "triangle", "two_cycle", "cycle4", "line"}) {
    auto a = corpus_algebra(name);
    std::vector<Representation> ms;
    for (int i = 0; i < a->vertex_count(); ++i) {
      ms.push_back(projective(a, i));
      ms.push_back(simple(a, i));
    }
    ms.push_back(regular_module(a).rep);
    for (int i = 0; i < a->vertex_count(); ++i)
      for (const auto& m : ms) CHECK(hom_space(projective(a, i), m).size() == m.dim(i));
  }
}

TEST_CASE("hom dimensions match enumeration over F2") {
  for (const char* name : {"line_zero", "triangle", "two_cycle"}) {
    auto a = corpus_algebra_over(name, Field::prime(2));
    std::vector<Representation> ms;
    for (int i = 0; i < a->vertex_count(); ++i) {
      ms.push_back(projective(a, i));
      ms.push_back(simple(a, i));
    }
    for (const auto& m : ms)
      for (const auto& n : ms) {
        std::size_t unknowns = 0;
        for (int v = 0; v < m.vertex_count(); ++v) unknowns += m.dim(v) * n.dim(v);
        if (unknowns > 12) continue;
        CHECK(count_maps(m, n, 2) == power(2, hom_space(m, n).size()));
      }
  }
}

TEST_CASE("kernels and cokernels") {
  auto two_cycle = corpus_algebra("two_cycle");
  auto p1 = projective(two_cycle, 0);
  auto id = kernel_cokernel(ModuleMap::identity(p1));
  CHECK(id.kernel.rep.is_zero());
  CHECK(id.cokernel.rep.is_zero());

  auto triangle = corpus_algebra("triangle");
  ModuleMap gamma_star = right_mult(triangle, 1, 0, "gamma");
  CHECK(gamma_star.commutes());
  auto kc = kernel_cokernel(gamma_star);
  CHECK(kc.kernel.rep.is_zero());
  CHECK(kc.cokernel.rep.total_dim() == 2);

  ModuleMap alpha_star = right_mult(two_cycle, 1, 0, "alpha");
  auto kc2 = kernel_cokernel(alpha_star);
  CHECK(kc2.kernel.rep.is_zero());
  CHECK(kc2.cokernel.rep.total_dim() == 1);
  CHECK(find_isomorphism(kc2.cokernel.rep, simple(two_cycle, 0)));

  // ker → M → coker composes to zero and ranks add up.
  CHECK(compose(gamma_star, kc.kernel.inclusion).is_zero());
  CHECK(compose(kc.cokernel.projection, gamma_star).is_zero());
  CHECK(kc.image.rep.total_dim() + kc.cokernel.rep.total_dim() == gamma_star.target.total_dim());
}

TEST_CASE("projective covers and resolutions") {
  auto line_zero = corpus_algebra("line_zero");
  auto c = projective_cover(simple(line_zero, 0));
  CHECK(c.cover.summands == std::vector<int>{0});
  CHECK(c.map.is_surjective());

  auto two_cycle = corpus_algebra("two_cycle");
  auto c2 = projective_cover(simple(two_cycle, 0));
  CHECK(c2.cover.summands == std::vector<int>{0});
  CHECK(kernel_cokernel(c2.map).kernel.rep.total_dim() == 3);

  auto p = projective(two_cycle, 1);
  CHECK(projective_cover(p).map.is_isomorphism());
  CHECK(resolve(p).projective_dimension == 0u);

  auto r = resolve(simple(line_zero, 0));
  CHECK(r.projective_dimension == 2u);
  REQUIRE(r.terms.size() == 3);
  CHECK(r.terms[1].summands == std::vector<int>{1});
  CHECK(r.terms[2].summands == std::vector<int>{2});
  CHECK(resolve(simple(two_cycle, 0)).projective_dimension == 1u);

  // Exactness: d_k ∘ d_{k+1} = 0 and im d_{k+1} = ker d_k.
  for (std::size_t k = 0; k + 1 < r.differentials.size(); ++k) {
    CHECK(compose(r.differentials[k], r.differentials[k + 1]).is_zero());
    CHECK(r.differentials[k + 1].rank() + r.differentials[k].rank() == r.terms[k].rep().total_dim());
  }

  // The arrow ideal of an oriented cycle without enough relations gives an
  // infinite resolution; the cap is reported, not a guess.
  auto cyc = corpus_algebra("cycle4");
  auto rc = resolve(simple(cyc, 0), 3);
  if (rc.capped()) CHECK(rc.terms.size() == 3);
}

TEST_CASE("minimal covers have kernel in the radical") {
  for (const char* name : {"line_zero", "triangle", "two_cycle", "cycle4"}) {
    auto a = corpus_algebra(name);
    for (int i = 0; i < a->vertex_count(); ++i) {
      auto s = simple(a, i);
      auto r = resolve(s, 4);
      for (std::size_t k = 0; k < r.syzygies.size(); ++k) {
        auto rad = radical_subspaces(r.terms[k].rep());
        const auto& inc = r.syzygies[k].inclusion;
        for (std::size_t v = 0; v < inc.components.size(); ++v)
          CHECK(in_span(rad[v], inc.components[v]));
      }
    }
  }
}

TEST_CASE("trace submodules") {
  auto line_zero = corpus_algebra("line_zero");
  CHECK(trace_submodule(simple(line_zero, 0), projective(line_zero, 1)).rep.is_zero());
  auto reg = regular_module(line_zero).rep;
  CHECK(trace_submodule(reg, reg).rep.total_dim() == reg.total_dim());

  auto two_cycle = corpus_algebra("two_cycle");
  auto p1 = projective(two_cycle, 0);
  auto b = direct_sum({p1, p1}, two_cycle).sum;
  CHECK(trace_submodule(b, regular_module(two_cycle).rep).rep.total_dim() == 6);
}

TEST_CASE("tensor products") {
  for (const char* name : {"line_zero", "triangle", "two_cycle", "cycle4"}) {
    auto a = corpus_algebra(name);
    auto right_reg = regular_module(a->opposite()).rep;
    for (int i = 0; i < a->vertex_count(); ++i) {
      auto p = projective(a, i);
      CHECK(tensor(right_reg, p).dim() == p.total_dim());
      auto s = simple(a, i);
      CHECK(tensor(right_reg, s).dim() == 1);
    }
  }

  auto a = corpus_algebra("line_zero");
  auto op = a->opposite();
  auto right_q = idempotent_quotient(op, {1}).rep;
  auto left_q = idempotent_quotient(a, {1}).rep;
  CHECK(left_q.total_dim() == 2);
  CHECK(tensor(right_q, projective(a, 1)).dim() == 0);
  CHECK(tensor(right_q, left_q).dim() == 2);
  CHECK_THROWS_AS(tensor(left_q, left_q), ValidationError);

  // Induced maps: id ⊗ (right multiplication) on A ⊗ P.
  auto right_reg = regular_module(op).rep;
  ModuleMap alpha_star = right_mult(a, 1, 0, "alpha");
  auto t1 = tensor(right_reg, alpha_star.source), t2 = tensor(right_reg, alpha_star.target);
  CHECK(rank(tensor_map_left(t1, t2, alpha_star)) == alpha_star.rank());
}

TEST_CASE("module files") {
  auto a = corpus_algebra("line_zero");
  auto m = parse_module(R"(
module M over line_zero
dims 1 1 0
arrow alpha
1
)",
                        a);
  CHECK(m.name == "M");
  CHECK_FALSE(m.right);
  CHECK(find_isomorphism(m.rep, projective(a, 0)));

  auto r = parse_module("module R over line_zero^op\ndims 0 1 1\narrow beta\n2\n", a);
  CHECK(r.right);
  CHECK(r.rep.algebra()->same_as(*a->opposite()));

  CHECK_THROWS_AS(parse_module("module X over other\ndims 1 0 0\n", a), ValidationError);
  CHECK_THROWS_AS(parse_module("module X over line_zero\ndims 1 1\n", a), ParseError);
  CHECK_THROWS_AS(parse_module("module X over line_zero\ndims 1 1 1\narrow alpha\n1\narrow beta\n1\n", a),
                  ValidationError);  // beta*alpha must act as zero
  auto again = parse_module(serialize_module(m, "line_zero"), a);
  CHECK(again.rep == m.rep);
}
