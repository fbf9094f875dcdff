#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qha/presentations/fd_algebra.hpp"
#include "qha/presentations/presentation.hpp"

namespace qha {

namespace detail {
class RuleIndex;
}

/// Rewriting rule lead → rhs; every word of rhs is smaller than lead.
struct Rule {
  Path lead;
  LinComb rhs;
};

/// A built presentation: a confluent rewriting system for I, the basis of
/// irreducible words and the resulting structure constants.
class PathAlgebra : public std::enable_shared_from_this<PathAlgebra> {
 public:
  struct Private;
  PathAlgebra(const Private&, Presentation p, std::shared_ptr<const detail::RuleIndex> index);

  [[nodiscard]] const Presentation& presentation() const noexcept { return pres_; }
  [[nodiscard]] const Quiver& quiver() const noexcept { return pres_.quiver; }
  [[nodiscard]] const Field& field() const noexcept { return pres_.field; }
  [[nodiscard]] int vertex_count() const noexcept { return pres_.quiver.vertex_count; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return rules_; }
  [[nodiscard]] const std::vector<Path>& basis() const noexcept { return basis_; }
  [[nodiscard]] const FDAlgebra& algebra() const noexcept { return alg_; }
  [[nodiscard]] const std::string& fingerprint() const noexcept { return fingerprint_; }

  [[nodiscard]] std::optional<std::size_t> find(const Path& word) const;
  [[nodiscard]] std::size_t vertex_index(int v) const;
  /// Basis indices of normal words starting at `from` and ending at `to`.
  [[nodiscard]] const std::vector<std::size_t>& words_between(int from, int to) const;

  [[nodiscard]] LinComb normal_form(const LinComb& x) const;
  [[nodiscard]] LinComb product(const LinComb& x, const LinComb& y) const;
  /// Coordinates of (the normal form of) x.
  [[nodiscard]] Vec coordinates(const LinComb& x) const;
  [[nodiscard]] LinComb element(const Vec& coords) const;
  [[nodiscard]] std::string element_str(const Vec& coords) const;

  /// Built presentation of A^op (cached).
  [[nodiscard]] std::shared_ptr<const PathAlgebra> opposite() const;

  /// Same presentation (pointer equality or equal fingerprints).
  [[nodiscard]] bool same_as(const PathAlgebra& other) const noexcept;

 private:
  friend std::shared_ptr<const PathAlgebra> build_algebra(const Presentation& p);

  Presentation pres_;
  std::vector<Rule> rules_;
  std::shared_ptr<const detail::RuleIndex> index_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> position_;
  std::vector<std::vector<std::size_t>> between_;
  FDAlgebra alg_;
  std::string fingerprint_;

  mutable std::mutex op_mutex_;
  mutable std::shared_ptr<const PathAlgebra> op_;
  mutable std::weak_ptr<const PathAlgebra> op_back_;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

/// Completes the relations to a confluent rewriting system (deg-lex order)
/// and enumerates the irreducible words.
///
/// Errors: ValidationError("NotAdmissible") when a relation has a term of
/// length below 2 or when the arrow ideal is not nilpotent modulo I;
/// CapExceeded("NotAdmissibleUpToCap") when irreducible words persist at
/// the degree cap.
AlgebraPtr build_algebra(const Presentation& p);

}  // namespace qha
