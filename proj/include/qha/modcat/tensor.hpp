#pragma once

#include "qha/modcat/representation.hpp"

namespace qha {

/// M ⊗_A N for a right module M (a left module over A^op) and a left
/// module N: the quotient of W = ⊕_i M_i ⊗ N_i by the relators
/// m·α ⊗ n − m ⊗ α·n. In W the pair (m, n) at vertex i sits at
/// offset_i + m·dim N_i + n.
struct TensorProduct {
  Representation right;
  Representation left;
  std::vector<std::size_t> offsets;
  std::size_t ambient = 0;
  Mat projection;  ///< dim × ambient
  Mat lift;        ///< ambient × dim

  [[nodiscard]] std::size_t dim() const noexcept { return projection.rows(); }
};

TensorProduct tensor(const Representation& right, const Representation& left);

/// id ⊗ h : M ⊗ N → M ⊗ N' (matrix in the quotient coordinates).
Mat tensor_map_left(const TensorProduct& from, const TensorProduct& to, const ModuleMap& h);
/// h ⊗ id : M ⊗ N → M' ⊗ N for h a map of right modules.
Mat tensor_map_right(const TensorProduct& from, const TensorProduct& to, const ModuleMap& h);

}  // namespace qha
