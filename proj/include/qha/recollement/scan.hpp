#pragma once

#include <optional>
#include <vector>

#include "qha/recollement/recollement.hpp"

namespace qha {

/// The three combinatorial conditions on an arrow α: i → j (given
/// relations are used for the third).
struct ArrowConditions {
  bool unique_from_source = false;  ///< α is the only arrow starting at i
  bool unique_into_target = false;  ///< α is the only arrow ending at j
  bool no_relation_at_target = false;
  [[nodiscard]] bool all() const noexcept { return unique_from_source && unique_into_target && no_relation_at_target; }
};

ArrowConditions arrow_conditions(const AlgebraPtr& a, int arrow);

struct ArrowScan {
  int arrow = 0;
  ArrowConditions conditions;
  std::vector<ProjMap> sigma;  ///< {α*: P_j → P_i}
  /// reflect(P_k) ≅ P_k via ψ for k ≠ j and reflect(P_j) ≅ P_i.
  bool reflection_table = false;
  /// θ ∘ ψ_j = α* for an isomorphism θ: reflect(P_j) → P_i.
  bool matrix_form = false;
  RecollementReport report;
  bool right_term_is_field = false;  ///< dim E = 1
};

struct ReflectionTable {
  bool table = false;
  bool matrix_form = false;
};

/// Reflection of every P_k with respect to α*.
ReflectionTable arrow_reflection_table(const AlgebraPtr& a, int arrow, const Caps& caps = {});

/// Every arrow meeting all three conditions, in declaration order.
std::vector<ArrowScan> scan_arrows(const AlgebraPtr& a, const Caps& caps = {});

struct IdempotentScan {
  std::vector<int> vertices;
  Verdict stratifying = Verdict::inconclusive;
  EpiFlags flags;
  FDAlgebra corner;
  std::optional<RecollementReport> report;  ///< when stratifying
};

/// Every proper nonempty vertex subset e, with the verdict for A → A/AeA.
/// Tor is computed up to `tor_cap` when pd(A/AeA) is not found below it.
std::vector<IdempotentScan> scan_stratifying(const AlgebraPtr& a, std::size_t tor_cap, const Caps& caps = {});

struct DerivedSimplicityWitness {
  Provenance provenance = Provenance::arrow;
  std::string label;
  RecollementReport report;
};

/// The first nontrivial recollement found by scan_arrows, then
/// scan_stratifying. nullopt means the searches found nothing, not that A
/// is derived simple.
std::optional<DerivedSimplicityWitness> derived_simplicity_witness(const AlgebraPtr& a, const Caps& caps = {});

}  // namespace qha
