#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qha/modcat/projectives.hpp"

namespace qha {

/// A map σ: ⊕_s P_{j_s} → ⊕_t P_{i_t} between finitely generated
/// projectives. Entry (t, s) lies in e_{j_s} A e_{i_t} (paths i_t → j_s)
/// and σ sends the s-th generator to Σ_t entry(t, s) in the t-th summand,
/// i.e. σ acts on each summand by right multiplication.
struct ProjMap {
  std::string name;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<std::vector<LinComb>> entries;  ///< entries[t][s]

  /// Throws ValidationError("InvalidSigma") on a shape or endpoint error.
  void validate(const PathAlgebra& alg) const;
};

/// The right multiplication x: P_j → P_i for x ∈ e_j A e_i.
ProjMap right_multiplication(const AlgebraPtr& alg, const LinComb& x, int j, int i, std::string name = "");

struct ProjMapModules {
  ProjectiveSum source;
  ProjectiveSum target;
  ModuleMap map;
};

ProjMapModules to_module_map(const ProjMap& sigma, const AlgebraPtr& alg);

/// Inverse of `to_module_map`.
ProjMap from_module_map(const ProjectiveSum& source, const ProjectiveSum& target, const ModuleMap& h,
                        std::string name = "");

/// Sigma file, one or more maps:
///   map <name> : P<j1>+P<j2>+... -> P<i1>+...     (0 for an empty sum)
///   entry <t> <s> <lincomb>                       (1-based, omitted entries are 0)
/// '#' starts a comment.
std::vector<ProjMap> parse_sigma(const std::string& text, const AlgebraPtr& alg);
std::vector<ProjMap> load_sigma(const std::filesystem::path& file, const AlgebraPtr& alg);
std::string serialize_sigma(const std::vector<ProjMap>& maps, const PathAlgebra& alg);

/// σ_U: P_1 → P_0 from a minimal resolution of U.
///
/// Errors: HypothesisError("ProjectiveDimensionTooLarge") when pd U ≥ 2.
ProjMap sigma_for_module(const Representation& u, std::string name = "");

}  // namespace qha
