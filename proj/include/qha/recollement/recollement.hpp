#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qha/localisation/ring_epi.hpp"

namespace qha {

/// Hypothesis check for "homological ⟺ universal localisation" on a
/// 1-finite ring epimorphism.
struct LocalisationCertificate {
  std::string status;  ///< "certified", "NotEpi" or "NotOneFinite"
  EpiFlags flags;
  /// Homological and the localisation at the extracted g is epiclass-equal to f.
  bool universal_localisation = false;
  std::optional<ProjMap> g;
  /// First degree with Tor_i(B, B) ≠ 0, when there is one.
  std::optional<std::size_t> tor_witness;
};

LocalisationCertificate certify_universal_localisation(const RingEpi& f, const Caps& caps = {});

enum class Provenance { user_sigma, arrow, idempotent, given };
const char* provenance_name(Provenance p);

/// Endpoint data D(B) → D(A) → D(E) with E = End_{D(A)}(K_f), plus the
/// certificates that were checked along the way.
struct RecollementReport {
  Provenance provenance = Provenance::given;
  std::string label;
  RingEpi f;
  EpiFlags flags;
  std::size_t hom_coker_ker = 0;
  std::vector<std::string> failed;  ///< names of failed hypotheses

  std::optional<KfResolution> resolution;
  QuasiIsoCheck resolution_check;
  std::optional<EndRing> end;
  std::size_t shift_minus1 = 0;  ///< dim Hom_K(P_f, K_f[-1])
  std::size_t shift_plus1 = 0;   ///< dim Hom_K(P_f, K_f[1])
  bool exceptional = false;

  /// Ω: A → E as a dim E x dim A matrix (right multiplication transported
  /// through q).
  std::optional<Mat> omega;
  bool omega_is_algebra_hom = false;
  bool omega_surjective = false;

  /// Only when f is finite.
  std::optional<TraceIdeal> trace;
  bool kernel_is_trace = false;
  std::optional<FDAlgebra> a_mod_trace;
  std::optional<Mat> iso;  ///< A/τ → E
  bool iso_verified = false;

  [[nodiscard]] bool built() const noexcept { return failed.empty() && end.has_value(); }
  [[nodiscard]] const char* verdict() const noexcept { return built() ? "built" : "HypothesisFailed"; }
  /// Both outer rings nonzero.
  [[nodiscard]] bool nontrivial() const { return built() && f.b.dim() > 0 && end->ring.dim() > 0; }
};

/// Hypotheses: epi, one_finite, homological, hom_coker_ker. Failures are
/// recorded in `failed`; nothing is thrown for them.
RecollementReport build_recollement(const RingEpi& f, const Caps& caps = {},
                                    Provenance provenance = Provenance::given, std::string label = "");

/// Ω for an arbitrary 1-finite f, in the representative basis of
/// homotopy_end_ring(r.pf).
Mat omega_matrix(const RingEpi& f, const KfResolution& r, const EndRing& end);

}  // namespace qha
