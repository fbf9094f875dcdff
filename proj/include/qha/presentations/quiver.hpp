#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qha/exactlin/field.hpp"

namespace qha {

// Vertex indices are 0-based in the API and 1-based in every text format.

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  /// Throws ValidationError on duplicate names or out-of-range endpoints.
  void validate() const;
  [[nodiscard]] std::optional<int> arrow_index(const std::string& name) const;
  [[nodiscard]] Quiver opposite() const;
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path a_m ... a_1 of a quiver, written as composition: a_1 acts first.
/// `letters` lists arrow indices in written order (leftmost = applied last).
/// A trivial path e_v has no letters and source = target = v.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> letters;

  static Path trivial(int vertex) { return {vertex, vertex, {}}; }
  static Path arrow(const Quiver& q, int index);

  [[nodiscard]] std::size_t length() const noexcept { return letters.size(); }
  [[nodiscard]] bool is_trivial() const noexcept { return letters.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Degree-lexicographic order: length, then letters by arrow declaration
/// order, then (for trivial paths) vertex.
std::strong_ordering operator<=>(const Path& a, const Path& b);

/// x·y (y acts first). Returns nullopt when source(x) != target(y).
std::optional<Path> concatenate(const Path& x, const Path& y);

std::string path_name(const Quiver& q, const Path& p);

/// Finite linear combination of paths with nonzero coefficients.
using LinComb = std::map<Path, Scalar>;

void lincomb_add(const Field& f, LinComb& into, const Path& p, const Scalar& c);
std::string lincomb_str(const Quiver& q, const LinComb& x);

/// Parses "[coeff*]a*b*c [+|- ...]" (letters in written order). A token
/// "e<k>" names the trivial path at vertex k (1-based) unless an arrow has
/// that name. Throws ParseError / ValidationError("UnknownArrow").
LinComb parse_lincomb(const Quiver& q, const Field& f, const std::string& text);

}  // namespace qha
