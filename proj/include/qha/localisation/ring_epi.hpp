#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qha/homology/kf_resolution.hpp"
#include "qha/localisation/reflection.hpp"

namespace qha {

/// A unital ring homomorphism f: A → B with B's induced module structures.
///
/// B_mod is B as a left A-module: its vertex-k space is f(e_k)B, and
/// `mod_to_b` maps its total coordinates to B coordinates. B_right is B as
/// a right A-module (over A^op) with vertex-k space B f(e_k).
struct RingEpi {
  AlgebraPtr a;
  FDAlgebra b;
  Mat f;  ///< dim B x dim A

  ProjectiveSum a_sum;  ///< A as ⊕ P_i
  Mat sum_to_a;         ///< total coordinates of a_sum → A coordinates
  Mat a_to_sum;

  Representation b_mod;
  Mat mod_to_b;
  Mat b_to_mod;
  Representation b_right;
  Mat right_to_b;
  Mat b_to_right;

  ModuleMap f_mod;  ///< a_sum → b_mod
  Subobject kernel;
  Quotient cokernel;

  std::vector<ProjMap> sigma;  ///< set when built by universal_localise
};

/// Throws ValidationError("NotRingHom") unless f is unital and
/// multiplicative.
RingEpi make_ring_epi(const AlgebraPtr& a, FDAlgebra b, Mat f);

RingEpi identity_epi(const AlgebraPtr& a);

/// A_Σ with B_mod = ⊕_i reflect(P_i) and B = End_A(B_mod)^op, the unit
/// being ψ(1). Certifies that B ⊗ σ is invertible and that f is a ring
/// epimorphism.
RingEpi universal_localise(const AlgebraPtr& a, const std::vector<ProjMap>& sigma, const Caps& caps = {});

/// Universal localisation at modules of projective dimension at most one.
RingEpi localise_at_modules(const AlgebraPtr& a, const std::vector<Representation>& modules, const Caps& caps = {});

/// B ⊗_A coker(f) = 0.
bool is_ring_epi(const RingEpi& f);
/// dim(B ⊗_A B) = dim B.
bool tensor_square_check(const RingEpi& f);

enum class Verdict { yes, no, inconclusive };
const char* verdict_name(Verdict v);

struct EpiFlags {
  bool is_epi = false;
  bool finite = false;      ///< B_mod projective
  bool flat = false;        ///< Tor_1(S, B) = 0 for every simple right module S
  bool one_finite = false;  ///< pd B_mod ≤ 1
  std::optional<std::size_t> projective_dimension;
  Verdict homological = Verdict::inconclusive;
  std::vector<std::size_t> tor;  ///< dim Tor_i(B, B) for i = 1, 2, ... as far as computed
};

EpiFlags classify(const RingEpi& f, const Caps& caps = {});

/// The unique A-module map h: B → C with h(1) = 1 (so h ∘ f = g), in B and
/// C coordinates, if it exists.
std::optional<Mat> comparison_map(const RingEpi& f, const RingEpi& g);
/// h exists, is bijective and multiplicative.
bool epiclass_equal(const RingEpi& f, const RingEpi& g);

struct QuotientAndCorner {
  RingEpi quotient;  ///< A → A/AeA
  FDAlgebra corner;  ///< eAe, basis the normal words with both ends in the subset
  Mat corner_to_a;   ///< corner coordinates → A coordinates
};

/// e = Σ_{i ∈ vertices} e_i (0-based vertices).
QuotientAndCorner quotient_and_corner(const AlgebraPtr& a, const std::vector<int>& vertices);

struct TraceIdeal {
  Subobject ideal;        ///< τ_B(A) inside the regular module
  Mat in_algebra;         ///< column basis in A coordinates
  std::vector<int> vertices;  ///< e with τ_B(A) = AeA
  bool routes_agree = false;  ///< trace of B_mod in A equals Σ_{Ae_i | B} Ae_iA
};

/// Errors: HypothesisError("NotFinite") unless B_mod is projective.
TraceIdeal trace_ideal(const RingEpi& f);

/// Ae_i is a direct summand of M.
bool projective_divides(int i, const Representation& m);

struct SigmaExtraction {
  ProjMap g;  ///< differential of P_f
  KfResolution resolution;
  bool finite = false;
  bool injective = false;
  bool surjective = false;
  std::optional<ProjMap> finite_map;           ///< f as a map A → B in A-proj
  std::optional<Representation> module;        ///< B/A when f is injective
  std::optional<std::vector<int>> idempotent;  ///< e with ker f = AeA when f is surjective
};

/// Errors: HypothesisError("HypothesesNotMet") listing which of
/// {epi, one_finite, homological} failed.
SigmaExtraction extract_sigma(const RingEpi& f, const Caps& caps = {});

}  // namespace qha
