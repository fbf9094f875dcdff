#pragma once

#include <string>
#include <vector>

#include "qha/presentations/path_algebra.hpp"

namespace qha {

/// A finite-dimensional left module over a presented algebra, as a quiver
/// representation: one vector space per vertex, one matrix per arrow
/// (target dim x source dim). Right modules are left modules over the
/// opposite algebra.
///
/// Elements of the module are vectors in the total space, the vertex
/// spaces concatenated in vertex order.
class Representation {
 public:
  Representation() = default;
  /// Validates matrix shapes and that every relation acts as zero.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> arrows);

  static Representation zero(AlgebraPtr alg);

  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return alg_; }
  [[nodiscard]] const Field& field() const { return alg_->field(); }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  [[nodiscard]] std::size_t dim(int v) const { return dims_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] std::size_t total_dim() const noexcept { return total_; }
  [[nodiscard]] std::size_t offset(int v) const { return offsets_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(dims_.size()); }
  [[nodiscard]] const Mat& arrow(std::size_t a) const { return arrows_.at(a); }
  [[nodiscard]] const std::vector<Mat>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] bool is_zero() const noexcept { return total_ == 0; }

  /// Matrix of a path: M_source → M_target.
  [[nodiscard]] Mat path_action(const Path& p) const;
  /// Action of an algebra element (coordinates in the algebra basis) on the
  /// total space.
  [[nodiscard]] Mat action(const Vec& element) const;
  /// Restriction of `action` to M_from → M_to.
  [[nodiscard]] Mat action(const Vec& element, int from, int to) const;

  /// Component of a total-space vector at vertex v.
  [[nodiscard]] Vec component(const Vec& x, int v) const;
  /// Total-space vector with the given component at v and zero elsewhere.
  [[nodiscard]] Vec embed(const Vec& xv, int v) const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<Mat> arrows_;
};

/// A module homomorphism, one matrix per vertex (target dim x source dim).
struct ModuleMap {
  Representation source;
  Representation target;
  std::vector<Mat> components;

  static ModuleMap zero(const Representation& s, const Representation& t);
  static ModuleMap identity(const Representation& m);
  /// From a total-space matrix; throws std::logic_error unless it respects
  /// the vertex decomposition and commutes with the arrows.
  static ModuleMap from_total(const Representation& s, const Representation& t, const Mat& total);

  /// Block-diagonal matrix on total spaces.
  [[nodiscard]] Mat total() const;
  [[nodiscard]] Vec apply(const Vec& x) const;
  [[nodiscard]] bool commutes() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_surjective() const;
  [[nodiscard]] bool is_isomorphism() const { return is_injective() && is_surjective(); }
  [[nodiscard]] std::size_t rank() const;

  ModuleMap operator+(const ModuleMap& o) const;
  [[nodiscard]] ModuleMap scaled(const Scalar& s) const;
};

/// g ∘ f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// Inverse of a bijective module map.
ModuleMap inverse(const ModuleMap& f);

/// Throws ValidationError("AlgebraMismatch") unless both are over the same
/// presentation.
void require_same_algebra(const Representation& m, const Representation& n);

struct DirectSum {
  Representation sum;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const std::vector<Representation>& parts, const AlgebraPtr& alg);

/// Map ⊕ sources → ⊕ targets from a block matrix of maps (blocks[t][s]:
/// source s → target t).
ModuleMap block_map(const DirectSum& sources, const DirectSum& targets,
                    const std::vector<std::vector<ModuleMap>>& blocks);

/// A module given by the action of the algebra on an ambient space:
/// `idempotents[v]` and `arrows[a]` are endomorphisms of the ambient space
/// (they must satisfy the quiver relations). `embed[v]` maps the vertex-v
/// space into the ambient space and `coords[v]` is a left inverse that
/// kills the other vertex spaces.
struct AmbientModule {
  Representation rep;
  std::vector<Mat> embed;
  std::vector<Mat> coords;

  /// Ambient vector → total-space vector.
  [[nodiscard]] Vec to_total(const Vec& ambient) const;
  /// Total-space vector → ambient vector.
  [[nodiscard]] Vec to_ambient(const Vec& total) const;
  /// Ambient-space n x n matrix of the isomorphism total space → ambient.
  [[nodiscard]] Mat to_ambient_matrix() const;
};

AmbientModule from_action(const AlgebraPtr& alg, const std::vector<Mat>& idempotents, const std::vector<Mat>& arrows);

/// The left regular module A. Vertex v carries the basis words ending at v
/// (in basis order), so the total space is a permutation of the algebra
/// basis.
struct RegularModule {
  Representation rep;
  Mat to_algebra;    ///< total → algebra coordinates
  Mat from_algebra;  ///< algebra → total coordinates
};

RegularModule regular_module(const AlgebraPtr& alg);

}  // namespace qha
