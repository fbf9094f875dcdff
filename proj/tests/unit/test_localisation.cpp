#include "corpus.hpp"
#include "doctest.h"
#include "qha/localisation/ring_epi.hpp"
#include "qha/modcat/tensor.hpp"

using namespace qha;

namespace {

std::vector<ProjMap> corpus_sigma(const std::string& name, const AlgebraPtr& a) {
  return load_sigma(std::string(QHA_CORPUS_DIR) + "/" + name + ".map", a);
}

// K → K × K, e ↦ (1, 1).
RingEpi diagonal_into_product() {
  auto point = corpus_algebra("point");
  const Field f = point->field();
  auto product = [](std::size_t i, std::size_t j) {
    Vec v(2);
    if (i == j) v[i] = 1;
    return v;
  };
  Vec unit{Scalar(1), Scalar(1)};
  FDAlgebra kk = FDAlgebra::from_function(f, {"u", "v"}, product, unit, {Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(1)}});
  Mat diag(f, 2, 1);
  diag(0, 0) = 1;
  diag(1, 0) = 1;
  return make_ring_epi(point, kk, diag);
}

}  // namespace

TEST_CASE("sigma files") {
  auto triangle = corpus_algebra("triangle");
  auto sigma = corpus_sigma("gamma_star", triangle);
  REQUIRE(sigma.size() == 1);
  CHECK(sigma[0].name == "gamma_star");
  CHECK(sigma[0].source == std::vector<int>{1});
  CHECK(sigma[0].target == std::vector<int>{0});
  auto again = parse_sigma(serialize_sigma(sigma, *triangle), triangle);
  CHECK(again[0].entries == sigma[0].entries);

  auto two = parse_sigma("map m : P2+P3 -> P1\nentry 1 1 gamma\nentry 1 2 alpha\nmap z : 0 -> P2\n", triangle);
  REQUIRE(two.size() == 2);
  CHECK(two[1].source.empty());
  CHECK_THROWS_AS(parse_sigma("map m : P2 -> P1\nentry 1 1 alpha\n", triangle), ValidationError);  // wrong endpoints
  CHECK_THROWS_AS(parse_sigma("map m : P2 -> P1\nentry 2 1 gamma\n", triangle), ParseError);
  CHECK_THROWS_AS(parse_sigma("entry 1 1 gamma\n", triangle), ParseError);
  CHECK_THROWS_AS(parse_sigma("map m : P7 -> P1\n", triangle), ValidationError);
  CHECK_THROWS_AS(parse_sigma("map m : Q2 -> P1\n", triangle), ParseError);

  auto m = to_module_map(sigma[0], triangle);
  CHECK(m.map.is_injective());
  auto back = from_module_map(m.source, m.target, m.map, "gamma_star");
  CHECK(back.entries == sigma[0].entries);
}

TEST_CASE("membership in X") {
  auto triangle = corpus_algebra("triangle");
  auto sigma = corpus_sigma("gamma_star", triangle);
  CHECK(in_X({}, projective(triangle, 2)));
  CHECK(in_X(sigma, projective(triangle, 0)));
  CHECK_FALSE(in_X(sigma, projective(triangle, 2)));
  CHECK_FALSE(in_X(sigma, projective(triangle, 1)));
}

TEST_CASE("reflections") {
  auto triangle = corpus_algebra("triangle");
  auto sigma = corpus_sigma("gamma_star", triangle);
  auto p1 = reflect(sigma, projective(triangle, 0));
  CHECK(p1.iterations == 0);
  CHECK(p1.unit.is_isomorphism());
  CHECK(reflect(sigma, projective(triangle, 1)).reflection.total_dim() == 3);
  auto r3 = reflect(sigma, projective(triangle, 2));
  CHECK(r3.reflection.total_dim() == 4);
  CHECK(in_X(sigma, r3.reflection));

  auto two_cycle = corpus_algebra("two_cycle");
  auto alpha = corpus_sigma("alpha_star", two_cycle);
  auto r2 = reflect(alpha, projective(two_cycle, 1));
  CHECK(find_isomorphism(r2.reflection, projective(two_cycle, 0)));
  CHECK(reflect(alpha, projective(two_cycle, 0)).unit.is_isomorphism());

  // Universal property: precomposition with ψ is a bijection
  // Hom(reflection, N) → Hom(M, N) for N in X.
  for (const auto& n : {projective(triangle, 0), r3.reflection}) {
    auto from_refl = hom_space(r3.reflection, n);
    auto from_m = hom_space(projective(triangle, 2), n);
    CHECK(from_refl.size() == from_m.size());
    std::vector<Vec> cols;
    for (const auto& h : from_refl) {
      Mat t = compose(h, r3.unit).total();
      cols.push_back(t.entries());
    }
    if (!cols.empty()) CHECK(rank(Mat::from_columns(triangle->field(), cols[0].size(), cols)) == cols.size());
  }
}

TEST_CASE("reflection caps") {
  auto kron = corpus_algebra("kronecker");
  auto sigma = corpus_sigma("kronecker_a", kron);
  Caps caps;
  caps.max_dim = 40;
  try {
    (void)reflect(sigma, projective(kron, 0), caps);
    FAIL("expected the reflection to diverge");
  } catch (const ReflectionCapExceeded& e) {
    CHECK(e.reason() == "max_dim");
    const auto& h = e.history();
    REQUIRE(h.size() >= 2);
    for (std::size_t k = 1; k < h.size(); ++k) CHECK(h[k] >= h[k - 1]);
    CHECK(h.back() > 40);
  }
  caps.max_dim = 10000;
  caps.max_iter = 3;
  CHECK_THROWS_AS(universal_localise(kron, sigma, caps), CapExceeded);
}

TEST_CASE("universal localisation") {
  auto triangle = corpus_algebra("triangle");
  auto gamma = universal_localise(triangle, corpus_sigma("gamma_star", triangle));
  CHECK(gamma.b.dim() == 10);
  CHECK(gamma.b.is_associative());
  CHECK(gamma.b.is_unital());
  CHECK(gamma.kernel.rep.is_zero());
  CHECK(gamma.cokernel.rep.total_dim() == 4);
  CHECK(tensor_square_check(gamma));

  auto two_cycle = corpus_algebra("two_cycle");
  auto alpha = universal_localise(two_cycle, corpus_sigma("alpha_star", two_cycle));
  CHECK(alpha.b.dim() == 8);
  auto p1 = projective(two_cycle, 0);
  CHECK(find_isomorphism(alpha.b_mod, direct_sum({p1, p1}, two_cycle).sum));

  auto id = universal_localise(two_cycle, {});
  CHECK(id.b.dim() == two_cycle->dim());
  CHECK(epiclass_equal(id, identity_epi(two_cycle)));
}

TEST_CASE("localisation at a projective module") {
  auto a = corpus_algebra("line_zero");
  auto loc = localise_at_modules(a, {projective(a, 1)});
  CHECK(loc.b.dim() == 2);
  auto q = quotient_and_corner(a, {1});
  CHECK(q.quotient.b.dim() == 2);
  CHECK(epiclass_equal(loc, q.quotient));
  CHECK(epiclass_equal(q.quotient, loc));
  auto flags = classify(loc);
  CHECK(flags.is_epi);
  CHECK_FALSE(flags.one_finite);
  CHECK(flags.projective_dimension == 2u);
  CHECK(flags.homological == Verdict::no);
  REQUIRE(flags.tor.size() == 2);
  CHECK(flags.tor[0] == 0);
  CHECK(flags.tor[1] == 1);
  CHECK_THROWS_AS(localise_at_modules(a, {simple(a, 0)}), HypothesisError);  // pd S_1 = 2
}

TEST_CASE("ring epimorphism test") {
  auto a = corpus_algebra("line_zero");
  CHECK(is_ring_epi(identity_epi(a)));
  CHECK(is_ring_epi(quotient_and_corner(a, {1}).quotient));
  auto diag = diagonal_into_product();
  CHECK_FALSE(is_ring_epi(diag));
  CHECK(tensor(diag.b_right, diag.cokernel.rep).dim() == 2);
  CHECK(classify(diag).homological == Verdict::no);

  Mat bad = Mat::identity(a->field(), a->dim());
  bad(0, 0) = 0;
  CHECK_THROWS_AS(make_ring_epi(a, a->algebra(), bad), ValidationError);
}

TEST_CASE("classification") {
  for (const char* name : {"line_zero", "triangle", "two_cycle", "line"}) {
    auto flags = classify(identity_epi(corpus_algebra(name)));
    CHECK(flags.finite);
    CHECK(flags.flat);
    CHECK(flags.one_finite);
    CHECK(flags.homological == Verdict::yes);
  }
  auto two_cycle = corpus_algebra("two_cycle");
  auto alpha = classify(universal_localise(two_cycle, corpus_sigma("alpha_star", two_cycle)));
  CHECK(alpha.finite);
  CHECK(alpha.flat);
  CHECK(alpha.homological == Verdict::yes);

  auto triangle = corpus_algebra("triangle");
  auto gamma = classify(universal_localise(triangle, corpus_sigma("gamma_star", triangle)));
  CHECK(gamma.one_finite);
  CHECK(gamma.homological == Verdict::yes);
  CHECK(gamma.projective_dimension == 1u);
  CHECK_FALSE(gamma.finite);
  CHECK(gamma.flat == gamma.finite);
}

TEST_CASE("epiclasses of idempotent quotients") {
  auto a = corpus_algebra("line_zero");
  auto q1 = quotient_and_corner(a, {0}).quotient;
  auto q2 = quotient_and_corner(a, {1}).quotient;
  CHECK(q1.b.dim() == 3);
  CHECK_FALSE(epiclass_equal(q1, q2));
  CHECK_FALSE(epiclass_equal(q2, q1));
  CHECK(epiclass_equal(q1, q1));
}

TEST_CASE("quotients and corners") {
  auto two_cycle = corpus_algebra("two_cycle");
  auto qc = quotient_and_corner(two_cycle, {1});
  CHECK(qc.corner.dim() == 2);
  CHECK(qc.corner.is_associative());
  CHECK(qc.corner.is_unital());
  CHECK(qc.corner.labels() == std::vector<std::string>{"e2", "alpha*beta"});
  Vec x = qc.corner.basis_vector(1);
  CHECK(vec_is_zero(qc.corner.multiply(x, x)));
  CHECK(qc.quotient.b.dim() == 1);

  auto all = quotient_and_corner(two_cycle, {0, 1});
  CHECK(all.quotient.b.dim() == 0);
  CHECK(all.corner.dim() == two_cycle->dim());
  CHECK(is_ring_epi(all.quotient));
}

TEST_CASE("trace ideals") {
  auto two_cycle = corpus_algebra("two_cycle");
  auto alpha = universal_localise(two_cycle, corpus_sigma("alpha_star", two_cycle));
  auto t = trace_ideal(alpha);
  CHECK(t.routes_agree);
  CHECK(t.vertices == std::vector<int>{0});
  CHECK(t.in_algebra.cols() == 6);
  CHECK(t.ideal.rep.total_dim() == 6);

  auto id = trace_ideal(identity_epi(two_cycle));
  CHECK(id.routes_agree);
  CHECK(id.in_algebra.cols() == two_cycle->dim());

  auto triangle = corpus_algebra("triangle");
  CHECK_THROWS_AS(trace_ideal(universal_localise(triangle, corpus_sigma("gamma_star", triangle))), HypothesisError);
}

TEST_CASE("sigma extraction") {
  auto triangle = corpus_algebra("triangle");
  auto gamma = universal_localise(triangle, corpus_sigma("gamma_star", triangle));
  auto ex = extract_sigma(gamma);
  CHECK(ex.injective);
  CHECK_FALSE(ex.surjective);
  REQUIRE(ex.module);
  CHECK(ex.module->total_dim() == 4);
  CHECK(epiclass_equal(universal_localise(triangle, {ex.g}), gamma));
  CHECK(epiclass_equal(localise_at_modules(triangle, {*ex.module}), gamma));

  auto line = corpus_algebra("line");
  auto q = quotient_and_corner(line, {1}).quotient;
  auto ex2 = extract_sigma(q);
  CHECK(ex2.surjective);
  CHECK(ex2.idempotent == std::vector<int>{1});
  CHECK(epiclass_equal(universal_localise(line, {ex2.g}), q));
  CHECK(epiclass_equal(localise_at_modules(line, {q.kernel.rep}), q));

  auto two_cycle = corpus_algebra("two_cycle");
  auto alpha = universal_localise(two_cycle, corpus_sigma("alpha_star", two_cycle));
  auto ex3 = extract_sigma(alpha);
  REQUIRE(ex3.finite_map);
  CHECK(epiclass_equal(universal_localise(two_cycle, {*ex3.finite_map}), alpha));

  auto a = corpus_algebra("line_zero");
  CHECK_THROWS_AS(extract_sigma(quotient_and_corner(a, {1}).quotient), HypothesisError);
}
