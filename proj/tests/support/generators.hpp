#pragma once

#include <random>
#include <string>
#include <vector>

#include "qha/localisation/ring_epi.hpp"

namespace qha::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// A random element of e_j A e_i (paths i → j) with small integer
/// coefficients; may be zero.
inline LinComb random_paths(Rng& rng, const AlgebraPtr& a, int i, int j) {
  LinComb x;
  for (std::size_t w : a->words_between(i, j)) {
    const int c = uniform(rng, -2, 2);
    if (c != 0) x[a->basis()[w]] = Scalar(c);
  }
  return x;
}

/// A map ⊕P_{j_s} → ⊕P_{i_t} with at most `max_summands` summands on each side.
inline ProjMap random_proj_map(Rng& rng, const AlgebraPtr& a, int max_summands, const std::string& name) {
  const int n = a->vertex_count();
  ProjMap m{name, {}, {}, {}};
  const int ns = uniform(rng, 1, max_summands), nt = uniform(rng, 0, max_summands);
  for (int s = 0; s < ns; ++s) m.source.push_back(uniform(rng, 0, n - 1));
  for (int t = 0; t < nt; ++t) m.target.push_back(uniform(rng, 0, n - 1));
  m.entries.assign(m.target.size(), std::vector<LinComb>(m.source.size()));
  for (std::size_t t = 0; t < m.target.size(); ++t)
    for (std::size_t s = 0; s < m.source.size(); ++s) m.entries[t][s] = random_paths(rng, a, m.target[t], m.source[s]);
  return m;
}

inline std::vector<ProjMap> random_sigma(Rng& rng, const AlgebraPtr& a) {
  std::vector<ProjMap> out;
  const int k = uniform(rng, 1, 2);
  for (int i = 0; i < k; ++i) out.push_back(random_proj_map(rng, a, 1, "s" + std::to_string(i + 1)));
  return out;
}

/// The cokernel of a random map between sums of projectives.
inline Representation random_module(Rng& rng, const AlgebraPtr& a) {
  const int n = a->vertex_count();
  ProjMap m{"m", {}, {}, {}};
  const int ns = uniform(rng, 0, 2), nt = uniform(rng, 1, 2);
  for (int s = 0; s < ns; ++s) m.source.push_back(uniform(rng, 0, n - 1));
  for (int t = 0; t < nt; ++t) m.target.push_back(uniform(rng, 0, n - 1));
  m.entries.assign(m.target.size(), std::vector<LinComb>(m.source.size()));
  for (std::size_t t = 0; t < m.target.size(); ++t)
    for (std::size_t s = 0; s < m.source.size(); ++s) m.entries[t][s] = random_paths(rng, a, m.target[t], m.source[s]);
  return kernel_cokernel(to_module_map(m, a).map).cokernel.rep;
}

/// A random presentation with an arrow alpha: i → j that is the only arrow
/// leaving i and the only arrow entering j, and monomial relations none of
/// which ends at j.
inline Presentation random_arrow_presentation(Rng& rng) {
  Presentation p;
  p.name = "random";
  p.field = Field::rationals();
  const int n = uniform(rng, 2, 4);
  p.quiver.vertex_count = n;
  const int i = uniform(rng, 0, n - 1);
  int j = uniform(rng, 0, n - 2);
  if (j >= i) ++j;
  p.quiver.arrows.push_back({"alpha", i, j});
  auto allowed = [&](int s, int t) { return s != i && t != j; };
  std::vector<bool> connected(static_cast<std::size_t>(n), false);
  connected[static_cast<std::size_t>(i)] = connected[static_cast<std::size_t>(j)] = true;
  int named = 0;
  for (int v = 0; v < n; ++v) {
    if (connected[static_cast<std::size_t>(v)]) continue;
    // v → i and j → v are always allowed.
    if (uniform(rng, 0, 1))
      p.quiver.arrows.push_back({"b" + std::to_string(named++), v, i});
    else
      p.quiver.arrows.push_back({"b" + std::to_string(named++), j, v});
    connected[static_cast<std::size_t>(v)] = true;
  }
  const int extra = uniform(rng, 0, 3);
  for (int k = 0; k < extra; ++k) {
    const int s = uniform(rng, 0, n - 1), t = uniform(rng, 0, n - 1);
    if (allowed(s, t)) p.quiver.arrows.push_back({"b" + std::to_string(named++), s, t});
  }

  // Composable words of length 3 not ending at j.
  const auto& arrows = p.quiver.arrows;
  std::vector<Path> words;
  for (std::size_t a1 = 0; a1 < arrows.size(); ++a1)
    for (std::size_t a2 = 0; a2 < arrows.size(); ++a2)
      for (std::size_t a3 = 0; a3 < arrows.size(); ++a3) {
        if (arrows[a1].target != arrows[a2].source || arrows[a2].target != arrows[a3].source) continue;
        if (arrows[a3].target == j) continue;
        words.push_back({arrows[a1].source, arrows[a3].target,
                         {static_cast<int>(a3), static_cast<int>(a2), static_cast<int>(a1)}});
      }
  // Every word of length 4 contains one of these, so keeping all of them
  // bounds the dimension; a random subset is tried first.
  std::shuffle(words.begin(), words.end(), rng);
  const std::size_t keep = words.empty() ? 0 : static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(words.size())));
  for (std::size_t k = 0; k < words.size(); ++k)
    if (k < keep) p.relations.push_back(LinComb{{words[k], Scalar(1)}});
  p.degree_cap = 10;
  try {
    build_algebra(p);
  } catch (const Error&) {
    p.relations.clear();
    for (const auto& w : words) p.relations.push_back(LinComb{{w, Scalar(1)}});
  }
  return p;
}

}  // namespace qha::testing
