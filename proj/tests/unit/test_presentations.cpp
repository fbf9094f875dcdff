#include <random>

#include "doctest.h"
#include "qha/error.hpp"
#include "qha/presentations/path_algebra.hpp"

using namespace qha;

namespace {

const char* kLinear = R"(
field Q
vertices 3
arrow alpha 1 2
arrow beta 2 3
relation beta*alpha
)";

const char* kTriangle = R"(
vertices 3
arrow gamma 1 2
arrow alpha 1 3
arrow beta 3 2
relation beta*alpha
)";

const char* kTwoCycle = R"(
vertices 2
arrow alpha 1 2
arrow beta 2 1
relation beta*alpha*beta
)";

LinComb lc(const AlgebraPtr& a, const std::string& s) { return parse_lincomb(a->quiver(), a->field(), s); }

std::vector<std::string> labels(const AlgebraPtr& a) { return a->algebra().labels(); }

// Counts paths of each length by brute force and discards those containing
// a forbidden monomial subword.
std::size_t count_paths_avoiding(const Quiver& q, const std::vector<std::vector<int>>& forbidden, int max_len) {
  std::size_t count = static_cast<std::size_t>(q.vertex_count);
  std::vector<Path> level;
  for (int v = 0; v < q.vertex_count; ++v) level.push_back(Path::trivial(v));
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& w : level)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == w.target) {
          Path x{w.source, q.arrows[a].target, {static_cast<int>(a)}};
          x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.end());
          next.push_back(x);
        }
    level.clear();
    for (auto& x : next) {
      bool bad = false;
      for (const auto& f : forbidden)
        bad = bad || std::search(x.letters.begin(), x.letters.end(), f.begin(), f.end()) != x.letters.end();
      if (!bad) level.push_back(x);
    }
    count += level.size();
  }
  return count;
}

}  // namespace

TEST_CASE("linear quiver with beta*alpha = 0") {
  auto a = build_algebra(parse_presentation(kLinear));
  CHECK(a->dim() == 5);
  CHECK(labels(a) == std::vector<std::string>{"e1", "e2", "e3", "alpha", "beta"});
  CHECK(a->normal_form(lc(a, "beta*alpha")).empty());
  CHECK(a->normal_form(lc(a, "e1")) == lc(a, "e1"));
  CHECK(a->algebra().is_associative());
  CHECK(a->algebra().is_unital());
  CHECK(a->algebra().idempotents_are_complete());
}

TEST_CASE("triangle quiver") {
  auto a = build_algebra(parse_presentation(kTriangle));
  CHECK(a->dim() == 6);
  CHECK(a->words_between(0, 1).size() == 1);  // gamma only
}

TEST_CASE("two-cycle with beta*alpha*beta = 0") {
  auto a = build_algebra(parse_presentation(kTwoCycle));
  CHECK(a->dim() == 7);
  CHECK(labels(a) ==
        std::vector<std::string>{"e1", "e2", "alpha", "beta", "alpha*beta", "beta*alpha", "alpha*beta*alpha"});
  CHECK(a->normal_form(lc(a, "alpha*beta*alpha*beta")).empty());
  CHECK(a->normal_form(lc(a, "alpha*beta*alpha")) == lc(a, "alpha*beta*alpha"));
  auto op = a->opposite();
  CHECK(op->dim() == 7);
  CHECK(op->opposite().get() == a.get());
  CHECK(a->algebra().opposite().opposite() == a->algebra());
}

TEST_CASE("opposite algebra reverses products") {
  auto a = build_algebra(parse_presentation(kLinear));
  const FDAlgebra& A = a->algebra();
  FDAlgebra op = A.opposite();
  Vec alpha = a->coordinates(lc(a, "alpha"));
  Vec beta = a->coordinates(lc(a, "beta"));
  CHECK(vec_is_zero(A.multiply(beta, alpha)));
  CHECK(vec_is_zero(op.multiply(alpha, beta)));
  CHECK(op.dim() == 5);
  CHECK(op.is_associative());

  FDAlgebra kk = FDAlgebra::from_function(
      Field{}, {"e1", "e2"},
      [](std::size_t i, std::size_t j) {
        Vec v(2);
        if (i == j) v[i] = 1;
        return v;
      },
      Vec{1, 1}, {Vec{1, 0}, Vec{0, 1}});
  CHECK(kk.opposite() == kk);
}

TEST_CASE("non-monomial relations complete to a confluent system") {
  // Commutative square: both paths 1→4 identified.
  auto a = build_algebra(parse_presentation(R"(
vertices 4
arrow a 1 2
arrow b 2 4
arrow c 1 3
arrow d 3 4
relation b*a - d*c
)"));
  CHECK(a->dim() == 4 + 4 + 1);
  CHECK(a->algebra().is_associative());
  CHECK(a->normal_form(lc(a, "b*a - d*c")).empty());

  // x^2 = y^2 with xy = yx = 0 on one vertex: needs an extra rule (x^3 = 0).
  auto b = build_algebra(parse_presentation(R"(
vertices 1
arrow x 1 1
arrow y 1 1
relation x*x - y*y
relation x*y
relation y*x
)"));
  CHECK(b->dim() == 4);  // 1, x, y, x^2
  CHECK(b->algebra().is_associative());
  CHECK(b->normal_form(lc(b, "x*x*x")).empty());
}

TEST_CASE("admissibility failures") {
  CHECK_THROWS_AS(build_algebra(parse_presentation("vertices 1\narrow x 1 1\nrelation x\n")), ValidationError);
  try {
    build_algebra(parse_presentation("vertices 1\narrow x 1 1\nrelation x*x - x*x*x\n"));
    FAIL("expected NotAdmissible");
  } catch (const ValidationError& e) {
    CHECK(e.reason() == "NotAdmissible");
  }
  try {
    build_algebra(parse_presentation("vertices 1\narrow x 1 1\ndegree-cap 10\n"));
    FAIL("expected cap");
  } catch (const CapExceeded& e) {
    CHECK(e.reason() == "NotAdmissibleUpToCap");
  }
  try {
    build_algebra(parse_presentation("vertices 2\narrow x 1 2\narrow y 1 2\narrow z 2 2\nrelation z*x - y\n"));
    FAIL("expected NotAdmissible");
  } catch (const ValidationError& e) {
    CHECK(e.reason() == "NotAdmissible");
  }
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_presentation("vertices 2\narrow a 1 2\nrelation b*a\n"), ValidationError);
  CHECK_THROWS_AS(parse_presentation("vertices 2\narrow a 1 3\n"), ValidationError);
  CHECK_THROWS_AS(parse_presentation("vertices 2\nfrobnicate\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("arrow a 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices 3\narrow a 1 2\narrow b 2 3\nrelation a*b\n"), ValidationError);
  auto p = parse_presentation("field F 7\nvertices 2 # two\narrow a 1 2\narrow b 2 2\nrelation 3/2*b*a + b*b\n");
  CHECK(p.field.characteristic() == 7);
  CHECK(p.relations.size() == 1);
}

TEST_CASE("serialisation round trip") {
  for (const char* text : {kLinear, kTriangle, kTwoCycle}) {
    auto p = parse_presentation(text);
    auto q = parse_presentation(serialize_presentation(p));
    auto a = build_algebra(p), b = build_algebra(q);
    CHECK(a->basis() == b->basis());
    CHECK(a->algebra() == b->algebra());
  }
}

TEST_CASE("monomial algebras match brute-force path counts") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Quiver q;
    q.vertex_count = 1 + static_cast<int>(rng() % 3);
    int arrows = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < arrows; ++i)
      q.arrows.push_back(Arrow{"a" + std::to_string(i), static_cast<int>(rng() % q.vertex_count),
                               static_cast<int>(rng() % q.vertex_count)});
    // Forbid every path of length 4 to force finiteness, plus random shorter ones.
    Presentation p{"T", Field{}, q, {}, 64};
    std::vector<std::vector<int>> forbidden;
    std::vector<Path> level;
    for (int v = 0; v < q.vertex_count; ++v) level.push_back(Path::trivial(v));
    for (int len = 1; len <= 4; ++len) {
      std::vector<Path> next;
      for (const auto& w : level)
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
          if (q.arrows[a].source == w.target) {
            Path x{w.source, q.arrows[a].target, {static_cast<int>(a)}};
            x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.end());
            next.push_back(x);
          }
      level = next;
      for (const auto& x : level)
        if (len == 4 || (len >= 2 && rng() % 4 == 0)) {
          forbidden.push_back(x.letters);
          p.relations.push_back(LinComb{{x, Scalar(1)}});
        }
    }
    auto a = build_algebra(p);
    CHECK(a->dim() == count_paths_avoiding(q, forbidden, 4));
  }
}

TEST_CASE("rewriting is compatible with multiplication") {
  auto a = build_algebra(parse_presentation(R"(
vertices 2
arrow a 1 2
arrow b 2 1
arrow c 1 1
relation c*c - b*a
relation a*c
relation c*b*a
)"));
  CHECK(a->algebra().is_associative());
  std::mt19937_64 rng(5);
  // Random words composed into random combinations.
  auto random_word = [&](int from) {
    Path w = Path::trivial(from);
    int len = static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      std::vector<int> out;
      for (std::size_t k = 0; k < a->quiver().arrows.size(); ++k)
        if (a->quiver().arrows[k].source == w.target) out.push_back(static_cast<int>(k));
      int k = out[rng() % out.size()];
      w = *concatenate(Path::arrow(a->quiver(), k), w);
    }
    return w;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    LinComb x, y;
    for (int t = 0; t < 3; ++t) {
      lincomb_add(a->field(), x, random_word(static_cast<int>(rng() % 2)), Scalar(static_cast<long long>(rng() % 5) - 2));
      lincomb_add(a->field(), y, random_word(static_cast<int>(rng() % 2)), Scalar(static_cast<long long>(rng() % 5) - 2));
    }
    LinComb raw;
    for (const auto& [p, c] : x)
      for (const auto& [q, d] : y)
        if (auto cat = concatenate(p, q)) lincomb_add(a->field(), raw, *cat, c * d);
    CHECK(a->normal_form(raw) == a->product(a->normal_form(x), a->normal_form(y)));
  }
}
