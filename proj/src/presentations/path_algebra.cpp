#include "qha/presentations/path_algebra.hpp"

#include <queue>
#include <sstream>
#include <tuple>

#include "qha/error.hpp"
#include "rewriting.hpp"

namespace qha {

struct PathAlgebra::Private {};

namespace {

using detail::RuleIndex;

constexpr std::size_t kMaxIrreducibleWords = 200000;

struct Overlap {
  std::size_t length;
  std::size_t left, right, shared;
  friend bool operator>(const Overlap& a, const Overlap& b) {
    return std::tie(a.length, a.left, a.right, a.shared) > std::tie(b.length, b.left, b.right, b.shared);
  }
};

class Completion {
 public:
  explicit Completion(Field f) : index_(f) {}

  RuleIndex& index() { return index_; }

  void insert(const LinComb& g) {
    std::vector<LinComb> pending{g};
    while (!pending.empty()) {
      LinComb x = index_.reduce(std::move(pending.back()));
      pending.pop_back();
      if (x.empty()) continue;
      const Field& f = index_.field();
      auto top = std::prev(x.end());
      Path lead = top->first;
      Scalar inv = f.inv(top->second);
      x.erase(top);
      if (lead.length() < 2) throw ValidationError("NotAdmissible", "the ideal contains an element outside J^2");
      LinComb rhs;
      for (const auto& [p, c] : x) rhs.emplace(p, f.neg(f.mul(c, inv)));

      // Inclusion ambiguities: a rule whose lead contains the new lead is
      // retired and its element fed back through the queue.
      const auto& rules = index_.rules();
      for (std::size_t id = 0; id < rules.size(); ++id) {
        if (!index_.alive()[id] || !contains(rules[id].lead.letters, lead.letters)) continue;
        LinComb back = rules[id].rhs;
        lincomb_add(f, back, rules[id].lead, f.neg(Scalar(1)));
        pending.push_back(std::move(back));
        index_.remove(id);
      }
      std::size_t id = index_.add(Rule{lead, std::move(rhs)});
      for (std::size_t other = 0; other <= id; ++other) {
        if (!index_.alive()[other]) continue;
        queue_overlaps(id, other);
        if (other != id) queue_overlaps(other, id);
      }
    }
  }

  /// Resolves queued overlaps whose word length is at most `max_len`.
  void process(std::size_t max_len) {
    while (!queue_.empty() && queue_.top().length <= max_len) {
      Overlap o = queue_.top();
      queue_.pop();
      if (!index_.alive()[o.left] || !index_.alive()[o.right]) continue;
      LinComb s = s_polynomial(o.left, o.right, o.shared);
      if (!s.empty()) insert(s);
    }
  }

  /// Re-examines every overlap of the live rules; returns whether a new
  /// rule was needed.
  bool verify_all() {
    bool changed = false;
    const std::size_t n = index_.rules().size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!index_.alive()[a] || !index_.alive()[b]) continue;
        const auto& la = index_.rules()[a].lead.letters;
        const auto& lb = index_.rules()[b].lead.letters;
        for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
          if (!std::equal(la.end() - static_cast<long>(k), la.end(), lb.begin())) continue;
          LinComb s = s_polynomial(a, b, k);
          if (!s.empty()) {
            insert(s);
            changed = true;
          }
        }
      }
    return changed;
  }

  [[nodiscard]] bool queue_empty() const { return queue_.empty(); }

 private:
  static bool contains(const std::vector<int>& hay, const std::vector<int>& needle) {
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
  }

  void queue_overlaps(std::size_t left, std::size_t right) {
    const auto& la = index_.rules()[left].lead.letters;
    const auto& lb = index_.rules()[right].lead.letters;
    for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k)
      if (std::equal(la.end() - static_cast<long>(k), la.end(), lb.begin()))
        queue_.push(Overlap{la.size() + lb.size() - k, left, right, k});
  }

  // The word w = left.lead · (right.lead minus its first `shared` letters),
  // rewritten once at each end.
  LinComb s_polynomial(std::size_t left, std::size_t right, std::size_t shared) {
    const Field& f = index_.field();
    const Rule& a = index_.rules()[left];
    const Rule& b = index_.rules()[right];
    Path w{b.lead.source, a.lead.target, a.lead.letters};
    w.letters.insert(w.letters.end(), b.lead.letters.begin() + static_cast<long>(shared), b.lead.letters.end());
    LinComb diff;
    for (const auto& [p, c] : a.rhs) lincomb_add(f, diff, detail::splice(w, 0, a.lead.length(), p), c);
    const std::size_t pos = a.lead.length() - shared;
    for (const auto& [p, c] : b.rhs) lincomb_add(f, diff, detail::splice(w, pos, b.lead.length(), p), f.neg(c));
    return index_.reduce(std::move(diff));
  }

  RuleIndex index_;
  std::priority_queue<Overlap, std::vector<Overlap>, std::greater<>> queue_;
};

/// Irreducible words by length, extending on the left one arrow at a time.
/// Stops after `max_len` levels or when a level is empty.
std::vector<std::vector<Path>> irreducible_levels(const Quiver& q, const RuleIndex& idx, std::size_t max_len) {
  std::vector<std::vector<Path>> levels(1);
  for (int v = 0; v < q.vertex_count; ++v) levels[0].push_back(Path::trivial(v));
  std::size_t total = levels[0].size();
  for (std::size_t len = 1; len <= max_len && !levels.back().empty(); ++len) {
    std::vector<Path> next;
    for (const auto& w : levels.back())
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != w.target) continue;
        Path x{w.source, q.arrows[a].target, {static_cast<int>(a)}};
        x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.end());
        if (!idx.has_prefix_lead(x.letters)) next.push_back(std::move(x));
      }
    total += next.size();
    if (total > kMaxIrreducibleWords)
      throw CapExceeded("NotAdmissibleUpToCap",
                        "more than " + std::to_string(kMaxIrreducibleWords) + " irreducible words up to length " +
                            std::to_string(len));
    levels.push_back(std::move(next));
  }
  return levels;
}

void check_relation_shape(const Presentation& p) {
  for (const auto& r : p.relations) {
    if (r.empty()) continue;
    const Path& first = r.begin()->first;
    for (const auto& [path, c] : r) {
      if (path.length() < 2)
        throw ValidationError("NotAdmissible",
                              "relation " + lincomb_str(p.quiver, r) + " has a term of length below 2");
      if (path.source != first.source || path.target != first.target)
        throw ValidationError("InvalidRelation",
                              "terms of " + lincomb_str(p.quiver, r) + " do not share source and target");
    }
  }
}

std::string make_fingerprint(const Presentation& p) {
  std::ostringstream os;
  os << p.field.name() << '|' << p.quiver.vertex_count;
  for (const auto& a : p.quiver.arrows) os << '|' << a.name << ':' << a.source << '>' << a.target;
  for (const auto& r : p.relations) os << "|r:" << lincomb_str(p.quiver, r);
  return os.str();
}

}  // namespace

PathAlgebra::PathAlgebra(const Private&, Presentation p, std::shared_ptr<const detail::RuleIndex> index)
    : pres_(std::move(p)), index_(std::move(index)) {
  for (std::size_t id = 0; id < index_->rules().size(); ++id)
    if (index_->alive()[id]) rules_.push_back(index_->rules()[id]);

  auto levels = irreducible_levels(pres_.quiver, *index_, std::numeric_limits<std::size_t>::max());
  for (auto& lvl : levels)
    for (auto& w : lvl) basis_.push_back(std::move(w));
  std::sort(basis_.begin(), basis_.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) position_.emplace(basis_[i], i);

  const auto nv = static_cast<std::size_t>(vertex_count());
  between_.assign(nv * nv, {});
  for (std::size_t i = 0; i < basis_.size(); ++i)
    between_[static_cast<std::size_t>(basis_[i].source) * nv + static_cast<std::size_t>(basis_[i].target)].push_back(i);

  const std::size_t n = basis_.size();
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto cat = concatenate(basis_[i], basis_[j]);
      if (!cat) continue;
      LinComb nf = index_->reduce(LinComb{{*cat, Scalar(1)}});
      for (const auto& [w, c] : nf) table[i * n + j].emplace_back(position_.at(w), c);
      std::sort(table[i * n + j].begin(), table[i * n + j].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  Vec unit(n);
  std::vector<Vec> idem;
  for (int v = 0; v < vertex_count(); ++v) {
    std::size_t k = position_.at(Path::trivial(v));
    unit[k] = 1;
    Vec e(n);
    e[k] = 1;
    idem.push_back(std::move(e));
  }
  std::vector<std::string> labels;
  for (const auto& w : basis_) labels.push_back(path_name(pres_.quiver, w));
  alg_ = FDAlgebra(pres_.field, std::move(labels), std::move(table), std::move(unit), std::move(idem));
  fingerprint_ = make_fingerprint(pres_);
}

std::optional<std::size_t> PathAlgebra::find(const Path& word) const {
  if (auto it = position_.find(word); it != position_.end()) return it->second;
  return std::nullopt;
}

std::size_t PathAlgebra::vertex_index(int v) const { return position_.at(Path::trivial(v)); }

const std::vector<std::size_t>& PathAlgebra::words_between(int from, int to) const {
  return between_.at(static_cast<std::size_t>(from) * static_cast<std::size_t>(vertex_count()) +
                     static_cast<std::size_t>(to));
}

LinComb PathAlgebra::normal_form(const LinComb& x) const {
  for (const auto& [p, c] : x)
    for (int a : p.letters)
      if (a < 0 || static_cast<std::size_t>(a) >= quiver().arrows.size())
        throw ValidationError("UnknownArrow", "arrow index out of range");
  LinComb in;
  for (const auto& [p, c] : x) lincomb_add(field(), in, p, field().from(c));
  return index_->reduce(std::move(in));
}

LinComb PathAlgebra::product(const LinComb& x, const LinComb& y) const {
  LinComb out;
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : y)
      if (auto cat = concatenate(p, q)) lincomb_add(field(), out, *cat, field().mul(c, d));
  return index_->reduce(std::move(out));
}

Vec PathAlgebra::coordinates(const LinComb& x) const {
  Vec v(dim());
  for (const auto& [w, c] : normal_form(x)) v[position_.at(w)] = c;
  return v;
}

LinComb PathAlgebra::element(const Vec& coords) const {
  LinComb out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.emplace(basis_[i], coords[i]);
  return out;
}

std::string PathAlgebra::element_str(const Vec& coords) const { return lincomb_str(quiver(), element(coords)); }

std::shared_ptr<const PathAlgebra> PathAlgebra::opposite() const {
  std::lock_guard lock(op_mutex_);
  if (op_) return op_;
  if (auto back = op_back_.lock()) return back;
  auto op = build_algebra(qha::opposite(pres_));
  {
    std::lock_guard inner(op->op_mutex_);
    op->op_back_ = weak_from_this();
  }
  op_ = op;
  return op_;
}

bool PathAlgebra::same_as(const PathAlgebra& other) const noexcept {
  return this == &other || fingerprint_ == other.fingerprint_;
}

AlgebraPtr build_algebra(const Presentation& p) {
  p.quiver.validate();
  check_relation_shape(p);
  if (p.degree_cap < 2) throw ValidationError("InvalidCap", "degree cap must be at least 2");

  Completion comp(p.field);
  for (const auto& r : p.relations) {
    LinComb in;
    for (const auto& [path, c] : r) lincomb_add(p.field, in, path, p.field.from(c));
    comp.insert(in);
  }

  // Degree by degree: once every word of some length d is reducible, every
  // longer word is too, and the remaining ambiguities only involve words
  // that rewrite into lengths below d.
  const auto cap = static_cast<std::size_t>(p.degree_cap);
  for (std::size_t d = 2;; ++d) {
    comp.process(d);
    auto levels = irreducible_levels(p.quiver, comp.index(), d);
    if (levels.size() <= d || levels[d].empty()) break;
    if (d >= cap)
      throw CapExceeded("NotAdmissibleUpToCap",
                        "irreducible words of length " + std::to_string(d) + " persist at the degree cap");
  }
  do {
    comp.process(std::numeric_limits<std::size_t>::max());
  } while (comp.verify_all() || !comp.queue_empty());

  auto index = std::make_shared<RuleIndex>(comp.index());
  for (std::size_t id = 0; id < index->rules().size(); ++id)
    if (index->alive()[id]) index->set_rhs(id, index->reduce(index->rules()[id].rhs));

  auto alg = std::make_shared<PathAlgebra>(PathAlgebra::Private{}, p, std::move(index));

  // The arrow ideal must be nilpotent modulo I.
  const FDAlgebra& a = alg->algebra();
  std::vector<Vec> power;
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if (!alg->basis()[i].is_trivial()) power.push_back(a.basis_vector(i));
  std::vector<Vec> arrows;
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if (alg->basis()[i].length() == 1) arrows.push_back(a.basis_vector(i));
  std::size_t prev_dim = alg->dim() + 1;
  while (!power.empty()) {
    if (power.size() >= prev_dim)
      throw ValidationError("NotAdmissible", "the arrow ideal is not nilpotent modulo the relations");
    prev_dim = power.size();
    std::vector<Vec> next;
    for (const auto& x : power)
      for (const auto& y : arrows) {
        Vec z = a.multiply(x, y);
        if (!vec_is_zero(z)) next.push_back(std::move(z));
      }
    if (next.empty()) break;
    Mat basis = column_space(Mat::from_columns(p.field, alg->dim(), next)).basis;
    power.clear();
    for (std::size_t k = 0; k < basis.cols(); ++k) power.push_back(basis.col(k));
  }
  return alg;
}

}  // namespace qha
