#pragma once

// Rewriting modulo a finite set of rules lead → rhs over deg-lex ordered
// path words. Internal to the presentations library.

#include <map>
#include <optional>
#include <vector>

#include "qha/presentations/path_algebra.hpp"

namespace qha::detail {

struct Occurrence {
  std::size_t rule;
  std::size_t position;
};

class RuleIndex {
 public:
  explicit RuleIndex(Field f) : field_(f) {}

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return rules_; }
  [[nodiscard]] const std::vector<bool>& alive() const noexcept { return alive_; }

  std::size_t add(Rule r);
  void remove(std::size_t id);
  void set_rhs(std::size_t id, LinComb rhs) { rules_[id].rhs = std::move(rhs); }

  /// Leftmost occurrence of any live lead in `letters`.
  [[nodiscard]] std::optional<Occurrence> find(const std::vector<int>& letters) const;
  /// Whether some live lead is a prefix of `letters`.
  [[nodiscard]] bool has_prefix_lead(const std::vector<int>& letters) const;

  [[nodiscard]] LinComb reduce(LinComb x) const;

 private:
  Field field_;
  std::vector<Rule> rules_;
  std::vector<bool> alive_;
  std::map<std::vector<int>, std::size_t> by_lead_;
  std::map<std::size_t, int> lengths_;  // lead length → number of live rules
};

/// w with the factor letters[pos, pos+len) replaced by `middle`.
Path splice(const Path& w, std::size_t pos, std::size_t len, const Path& middle);

}  // namespace qha::detail
