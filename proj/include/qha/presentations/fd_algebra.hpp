#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qha/exactlin/linalg.hpp"

namespace qha {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// A finite-dimensional associative unital algebra given by a basis and
/// structure constants b_i·b_j = Σ_k c_ijk b_k.
///
/// `idempotents` is a complete set of orthogonal idempotents (for presented
/// algebras these are the trivial paths, hence primitive).
class FDAlgebra {
 public:
  FDAlgebra() = default;
  FDAlgebra(Field field, std::vector<std::string> labels, std::vector<SparseVec> products, Vec unit,
            std::vector<Vec> idempotents);

  /// Dense constructor: `product(i, j)` returns the coordinates of b_i·b_j.
  template <class F>
  static FDAlgebra from_function(Field field, std::vector<std::string> labels, F&& product, Vec unit,
                                 std::vector<Vec> idempotents) {
    const std::size_t n = labels.size();
    std::vector<SparseVec> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec v = product(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!v[k].is_zero()) table[i * n + j].emplace_back(k, v[k]);
      }
    return FDAlgebra(field, std::move(labels), std::move(table), std::move(unit), std::move(idempotents));
  }

  [[nodiscard]] std::size_t dim() const noexcept { return labels_.size(); }
  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  [[nodiscard]] const Vec& unit() const noexcept { return unit_; }
  [[nodiscard]] const std::vector<Vec>& idempotents() const noexcept { return idempotents_; }

  [[nodiscard]] Vec basis_vector(std::size_t i) const;
  [[nodiscard]] Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of y ↦ x·y.
  [[nodiscard]] Mat left_mult(const Vec& x) const;
  /// Matrix of y ↦ y·x.
  [[nodiscard]] Mat right_mult(const Vec& x) const;

  [[nodiscard]] bool is_associative() const;
  [[nodiscard]] bool is_unital() const;
  [[nodiscard]] bool idempotents_are_complete() const;
  [[nodiscard]] bool is_commutative() const;

  /// Same basis, c'_ijk = c_jik.
  [[nodiscard]] FDAlgebra opposite() const;

  /// Quotient by a two-sided ideal given as the column span of `ideal`.
  /// Returns the quotient algebra and the projection matrix.
  [[nodiscard]] std::pair<FDAlgebra, Mat> quotient(const Mat& ideal) const;

  /// Two-sided ideal generated by the given elements (column basis).
  [[nodiscard]] Mat ideal_generated_by(const std::vector<Vec>& gens) const;

  /// Jacobson radical (column basis). Uses the trace-form criterion, which is
  /// exact in characteristic 0 or characteristic above dim; throws otherwise.
  [[nodiscard]] Mat radical() const;

  friend bool operator==(const FDAlgebra& a, const FDAlgebra& b);

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Vec unit_;
  std::vector<Vec> idempotents_;
};

/// Linear map h between algebras (h: a.dim columns, b.dim rows) is a unital
/// ring homomorphism.
bool is_algebra_hom(const FDAlgebra& a, const FDAlgebra& b, const Mat& h);

}  // namespace qha
