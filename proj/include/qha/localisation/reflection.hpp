#pragma once

#include <vector>

#include "qha/error.hpp"
#include "qha/localisation/proj_map.hpp"

namespace qha {

struct Caps {
  std::size_t max_dim = 10000;
  std::size_t max_iter = 256;
  std::size_t resolution_cap = 16;  ///< resolution length for pd and Tor verdicts

  /// Defaults, with max_dim taken from QHA_MAX_DIM when set.
  static Caps from_env();
};

/// Hom(σ, M): Hom(Q, M) → Hom(P, M) as the matrix ⊕_t e_{i_t}M → ⊕_s e_{j_s}M.
Mat hom_sigma_matrix(const ProjMap& sigma, const Representation& m);

/// M lies in X_Σ: Hom(σ, M) is bijective for every σ.
bool in_X(const std::vector<ProjMap>& sigma, const Representation& m);

struct ReflectionResult {
  Representation reflection;
  ModuleMap unit;  ///< ψ_M: M → reflection
  std::size_t iterations = 0;
  std::vector<std::size_t> history;  ///< total dimension after each step, starting with M
};

/// Reflection of M into X_Σ. Each step repairs one failure of
/// bijectivity: a nonzero kernel of Hom(σ, M) is killed by dividing out the
/// images of the maps coker σ → M, and a nonzero cokernel is filled by a
/// pushout along σ^{⊕r}. Terminates only when in_X certifies the result.
///
/// Errors: ReflectionCapExceeded ("max_dim" or "max_iter").
ReflectionResult reflect(const std::vector<ProjMap>& sigma, const Representation& m, const Caps& caps = {});

class ReflectionCapExceeded : public CapExceeded {
 public:
  ReflectionCapExceeded(std::string reason, const std::string& message, std::vector<std::size_t> history)
      : CapExceeded(std::move(reason), message), history_(std::move(history)) {}
  [[nodiscard]] const std::vector<std::size_t>& history() const noexcept { return history_; }

 private:
  std::vector<std::size_t> history_;
};

}  // namespace qha
