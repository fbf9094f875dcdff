#pragma once

#include "qha/homology/complex.hpp"

namespace qha {

/// K_f = (A → B) and its projective model P_f = (A ⊕ P_1 → P_0), where
/// 0 → P_1 → P_0 → B → 0 is a minimal resolution of B as a left A-module.
/// The quasi-isomorphism q: P_f → K_f is the projection onto A in degree
/// -1 and the cover P_0 → B in degree 0.
struct KfResolution {
  TwoTermComplex kf;
  TwoTermComplex pf;
  ProjectiveSum a;       ///< A = ⊕ P_i
  ProjectiveSum minus1;  ///< summands of A followed by those of P_1
  ProjectiveSum zero;    ///< P_0
  std::size_t p1_summands = 0;
  ChainMap q;
};

/// `f` is A (as `a`) → B as left modules.
///
/// Errors: HypothesisError("ProjectiveDimensionTooLarge") when pd B ≥ 2.
KfResolution build_Kf_resolution(const ProjectiveSum& a, const ModuleMap& f);

struct QuasiIsoCheck {
  bool chain_map = false;  ///< f ∘ q^{-1} = q^0 ∘ g
  bool h_minus1 = false;   ///< q^{-1} maps ker g isomorphically onto ker f
  bool h_zero = false;     ///< q^0 induces coker g ≅ coker f
  bool ses_exact = false;  ///< 0 → P^{-1} → A ⊕ P^0 → B → 0 is exact
  [[nodiscard]] bool all() const noexcept { return chain_map && h_minus1 && h_zero && ses_exact; }
};

QuasiIsoCheck verify_resolution(const KfResolution& r);

}  // namespace qha
