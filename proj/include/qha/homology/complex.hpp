#pragma once

#include <optional>
#include <vector>

#include "qha/modcat/projectives.hpp"

namespace qha {

/// C^{-1} → C^0. There is no d² = 0 condition for two terms.
struct TwoTermComplex {
  Representation minus1;
  Representation zero;
  ModuleMap differential;
  bool projective_terms = false;
};

TwoTermComplex two_term(const ModuleMap& d, bool projective_terms = false);

/// A morphism of two-term complexes P → C[shift]. The parts are
///   shift  0: {P^{-1} → C^{-1}, P^0 → C^0}
///   shift  1: {P^{-1} → C^0}
///   shift -1: {P^0 → C^{-1}}
struct ChainMap {
  int shift = 0;
  std::vector<ModuleMap> parts;

  [[nodiscard]] Vec flatten() const;
};

ChainMap identity_chain_map(const TwoTermComplex& c);
/// g ∘ f for shift-0 chain maps.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap scaled(const ChainMap& a, const Scalar& s);

/// Hom_{K(A)}(P, C[shift]): chain maps modulo null-homotopic ones.
/// `representatives` lists chain maps whose classes form a basis of the
/// quotient.
struct HomotopyHomSpace {
  int shift = 0;
  std::vector<ChainMap> chain_basis;
  std::vector<ChainMap> null_basis;
  std::vector<ChainMap> representatives;
  std::size_t dim = 0;

  /// Coordinates of the class of a chain map in the representative basis.
  [[nodiscard]] Vec coordinates(const ChainMap& x) const;
  [[nodiscard]] bool is_null_homotopic(const ChainMap& x) const;

  Mat reps_with_null;  ///< columns: null-space basis then representatives
  std::size_t null_rank = 0;
};

/// Shifts outside {-1, 0, 1} give the zero space without computation.
HomotopyHomSpace homotopy_hom(const TwoTermComplex& p, const TwoTermComplex& c, int shift);

/// End_{K(A)}(P) as an algebra. The product of classes x, y is y ∘ x, so
/// that right multiplications compose into a ring homomorphism.
struct EndRing {
  HomotopyHomSpace space;
  FDAlgebra ring;
};

EndRing homotopy_end_ring(const TwoTermComplex& p);

}  // namespace qha
