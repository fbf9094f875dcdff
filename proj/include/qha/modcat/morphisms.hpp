#pragma once

#include <optional>
#include <vector>

#include "qha/modcat/representation.hpp"

namespace qha {

/// The linear system whose solutions are the module maps M → N. The
/// unknowns are the entries of the vertex matrices X_v, each row-major,
/// vertex after vertex.
struct HomSystem {
  Representation source;
  Representation target;
  std::vector<std::size_t> offsets;  ///< start of X_v in the unknown vector
  std::size_t unknowns = 0;
  Mat equations;  ///< equations · x = 0 ⟺ x is a module map

  [[nodiscard]] ModuleMap to_map(const Mat& column) const;
  [[nodiscard]] Mat to_column(const ModuleMap& h) const;
  /// Rows expressing "h applied to the total-space vector x" as a linear
  /// function of the unknowns (target.total_dim() rows).
  [[nodiscard]] Mat evaluation(const Vec& x) const;
};

HomSystem hom_system(const Representation& m, const Representation& n);

/// Basis of Hom_A(M, N).
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);

/// A subrepresentation given by one column basis per vertex.
struct Subobject {
  Representation rep;
  ModuleMap inclusion;
};

struct Quotient {
  Representation rep;
  ModuleMap projection;
  std::vector<Mat> lifts;  ///< per vertex, a section of the projection
};

/// `bases[v]` spans a subspace of M_v; the family must be closed under the
/// arrows.
Subobject subrepresentation(const Representation& m, const std::vector<Mat>& bases);
Quotient quotient(const Representation& m, const std::vector<Mat>& bases);

/// Smallest submodule containing the given total-space vectors.
std::vector<Mat> generated_subspaces(const Representation& m, const std::vector<Vec>& generators);

struct KernelCokernel {
  Subobject kernel;
  Quotient cokernel;
  Subobject image;
};

KernelCokernel kernel_cokernel(const ModuleMap& h);

/// τ_M(N): the sum of the images of all maps M → N.
Subobject trace_submodule(const Representation& m, const Representation& n);

/// An isomorphism M → N if one exists among generic combinations of a Hom
/// basis. A returned map is always a certified isomorphism.
std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n);

/// Per-vertex column bases of im(h).
std::vector<Mat> image_subspaces(const ModuleMap& h);

/// Per-vertex column basis of the whole space.
std::vector<Mat> full_subspaces(const Representation& m);

}  // namespace qha
