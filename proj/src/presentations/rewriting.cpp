#include "rewriting.hpp"

namespace qha::detail {

std::size_t RuleIndex::add(Rule r) {
  const std::size_t id = rules_.size();
  by_lead_[r.lead.letters] = id;
  ++lengths_[r.lead.length()];
  rules_.push_back(std::move(r));
  alive_.push_back(true);
  return id;
}

void RuleIndex::remove(std::size_t id) {
  if (!alive_[id]) return;
  alive_[id] = false;
  by_lead_.erase(rules_[id].lead.letters);
  if (--lengths_[rules_[id].lead.length()] == 0) lengths_.erase(rules_[id].lead.length());
}

std::optional<Occurrence> RuleIndex::find(const std::vector<int>& letters) const {
  std::vector<int> key;
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    for (const auto& [len, count] : lengths_) {
      if (pos + len > letters.size()) break;
      key.assign(letters.begin() + static_cast<long>(pos), letters.begin() + static_cast<long>(pos + len));
      if (auto it = by_lead_.find(key); it != by_lead_.end()) return Occurrence{it->second, pos};
    }
  }
  return std::nullopt;
}

bool RuleIndex::has_prefix_lead(const std::vector<int>& letters) const {
  std::vector<int> key;
  for (const auto& [len, count] : lengths_) {
    if (len > letters.size()) break;
    key.assign(letters.begin(), letters.begin() + static_cast<long>(len));
    if (by_lead_.count(key)) return true;
  }
  return false;
}

Path splice(const Path& w, std::size_t pos, std::size_t len, const Path& middle) {
  Path out{w.source, w.target, {}};
  out.letters.reserve(w.letters.size() - len + middle.letters.size());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(pos));
  out.letters.insert(out.letters.end(), middle.letters.begin(), middle.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<long>(pos + len), w.letters.end());
  return out;
}

LinComb RuleIndex::reduce(LinComb work) const {
  // Always rewrite the largest remaining word: rewriting only produces
  // smaller words, so a word moved to `out` never reappears.
  LinComb out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Path w = it->first;
    Scalar c = it->second;
    work.erase(it);
    auto occ = find(w.letters);
    if (!occ) {
      out.emplace_hint(out.begin(), std::move(w), std::move(c));
      continue;
    }
    const Rule& r = rules_[occ->rule];
    for (const auto& [p, d] : r.rhs)
      lincomb_add(field_, work, splice(w, occ->position, r.lead.length(), p), field_.mul(c, d));
  }
  return out;
}

}  // namespace qha::detail
