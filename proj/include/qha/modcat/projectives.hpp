#pragma once

#include <optional>
#include <vector>

#include "qha/modcat/morphisms.hpp"

namespace qha {

/// P_i = Ae_i. The vertex-k space has the normal words i → k as basis (in
/// algebra-basis order); the generator e_i is the first basis vector at i.
Representation projective(const AlgebraPtr& alg, int i);

/// The simple module S_i.
Representation simple(const AlgebraPtr& alg, int i);

/// Total-space coordinates of e_i in P_i.
Vec projective_generator(const Representation& p_i, int i);

/// The map P_i → M sending e_i to m (m ∈ e_i M, given as a vertex-i vector).
ModuleMap map_from_projective(const Representation& p_i, int i, const Representation& m, const Vec& m_at_i);

/// ⊕ P_{summands[t]} with its decomposition.
struct ProjectiveSum {
  std::vector<int> summands;
  DirectSum parts;

  [[nodiscard]] const Representation& rep() const noexcept { return parts.sum; }
  /// Total-space coordinates of the generator of summand t.
  [[nodiscard]] Vec generator(std::size_t t) const;
};

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& summands);

/// The map ⊕P_{i_t} → M sending the t-th generator to images[t] (total-space
/// vectors of M lying in e_{i_t}M).
ModuleMap map_from_projective_sum(const ProjectiveSum& p, const Representation& m, const std::vector<Vec>& images);

/// Vertex-wise radical rad(M)_i = Σ_{α: j→i} im(M_α) (rad A is the arrow
/// ideal for an admissible presentation).
std::vector<Mat> radical_subspaces(const Representation& m);

/// dim of top(M) at each vertex.
std::vector<std::size_t> top_dims(const Representation& m);

struct ProjectiveCover {
  ProjectiveSum cover;
  ModuleMap map;  ///< surjection onto M with kernel in rad of the cover
};

ProjectiveCover projective_cover(const Representation& m);

bool is_projective(const Representation& m);

/// Minimal projective resolution ... → P_1 → P_0 → M.
struct ResolutionReport {
  std::vector<ProjectiveSum> terms;      ///< P_0, P_1, ...
  std::vector<ModuleMap> differentials;  ///< d_k: P_k → P_{k-1}; d_0: P_0 → M
  std::vector<Subobject> syzygies;       ///< Ω^k M ⊆ P_{k-1} for k ≥ 1
  std::optional<std::size_t> projective_dimension;  ///< absent when capped
  std::size_t cap = 0;

  [[nodiscard]] bool capped() const noexcept { return !projective_dimension.has_value(); }
};

/// Stops when a syzygy vanishes (exact pd) or after `cap` terms (pd ≥ cap).
ResolutionReport resolve(const Representation& m, std::size_t cap = 32);

}  // namespace qha
