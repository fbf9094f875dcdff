#include "qha/modcat/representation.hpp"

#include "qha/error.hpp"

namespace qha {

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> arrows)
    : alg_(std::move(alg)), dims_(std::move(dims)), arrows_(std::move(arrows)) {
  const Quiver& q = alg_->quiver();
  if (dims_.size() != static_cast<std::size_t>(q.vertex_count))
    throw ValidationError("InvalidModule", "dimension vector has the wrong length");
  if (arrows_.size() != q.arrows.size()) throw ValidationError("InvalidModule", "wrong number of arrow matrices");
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Mat& m = arrows_[a];
    if (m.rows() != dim(q.arrows[a].target) || m.cols() != dim(q.arrows[a].source))
      throw ValidationError("InvalidModule", "matrix of arrow '" + q.arrows[a].name + "' has the wrong shape");
    if (!(m.field() == alg_->field()))
      throw ValidationError("InvalidModule", "matrix of arrow '" + q.arrows[a].name + "' is over the wrong field");
  }
  offsets_.resize(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += dims_[v];
  }
  const Field& f = alg_->field();
  for (const auto& r : alg_->presentation().relations) {
    if (r.empty()) continue;
    const Path& first = r.begin()->first;
    Mat sum(f, dim(first.target), dim(first.source));
    for (const auto& [p, c] : r) sum += path_action(p).scaled(f.from(c));
    if (!sum.is_zero())
      throw ValidationError("RelationViolated", "relation " + lincomb_str(q, r) + " does not act as zero");
  }
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Mat> arrows(q.arrows.size(), Mat(alg->field(), 0, 0));
  return {std::move(alg), std::vector<std::size_t>(static_cast<std::size_t>(q.vertex_count), 0), std::move(arrows)};
}

Mat Representation::path_action(const Path& p) const {
  Mat m = Mat::identity(field(), dim(p.source));
  for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it) m = arrows_[static_cast<std::size_t>(*it)] * m;
  return m;
}

Mat Representation::action(const Vec& element) const {
  Mat out(field(), total_, total_);
  const auto& basis = alg_->basis();
  for (std::size_t k = 0; k < element.size(); ++k) {
    if (element[k].is_zero()) continue;
    const Path& w = basis[k];
    if (dim(w.source) == 0 || dim(w.target) == 0) continue;
    Mat blk = path_action(w).scaled(element[k]);
    Mat cur = out.block(offset(w.target), offset(w.source), blk.rows(), blk.cols());
    out.set_block(offset(w.target), offset(w.source), cur + blk);
  }
  return out;
}

Mat Representation::action(const Vec& element, int from, int to) const {
  Mat out(field(), dim(to), dim(from));
  const auto& basis = alg_->basis();
  for (std::size_t k = 0; k < element.size(); ++k) {
    if (element[k].is_zero() || basis[k].source != from || basis[k].target != to) continue;
    out += path_action(basis[k]).scaled(element[k]);
  }
  return out;
}

Vec Representation::component(const Vec& x, int v) const {
  return Vec(x.begin() + static_cast<long>(offset(v)), x.begin() + static_cast<long>(offset(v) + dim(v)));
}

Vec Representation::embed(const Vec& xv, int v) const {
  Vec x(total_);
  std::copy(xv.begin(), xv.end(), x.begin() + static_cast<long>(offset(v)));
  return x;
}

bool operator==(const Representation& a, const Representation& b) {
  if (!a.alg_ || !b.alg_) return a.alg_ == b.alg_;
  return a.alg_->same_as(*b.alg_) && a.dims_ == b.dims_ && a.arrows_ == b.arrows_;
}

void require_same_algebra(const Representation& m, const Representation& n) {
  if (!m.algebra() || !n.algebra() || !m.algebra()->same_as(*n.algebra()))
    throw ValidationError("AlgebraMismatch", "modules are over different algebras");
}

ModuleMap ModuleMap::zero(const Representation& s, const Representation& t) {
  require_same_algebra(s, t);
  ModuleMap h{s, t, {}};
  for (int v = 0; v < s.vertex_count(); ++v) h.components.emplace_back(s.field(), t.dim(v), s.dim(v));
  return h;
}

ModuleMap ModuleMap::identity(const Representation& m) {
  ModuleMap h{m, m, {}};
  for (int v = 0; v < m.vertex_count(); ++v) h.components.push_back(Mat::identity(m.field(), m.dim(v)));
  return h;
}

ModuleMap ModuleMap::from_total(const Representation& s, const Representation& t, const Mat& total) {
  if (total.rows() != t.total_dim() || total.cols() != s.total_dim())
    throw std::logic_error("ModuleMap::from_total: shape mismatch");
  ModuleMap h = zero(s, t);
  for (int v = 0; v < s.vertex_count(); ++v)
    if (s.dim(v) && t.dim(v)) h.components[static_cast<std::size_t>(v)] = total.block(t.offset(v), s.offset(v), t.dim(v), s.dim(v));
  if (!(h.total() == total) || !h.commutes()) throw std::logic_error("ModuleMap::from_total: not a module map");
  return h;
}

Mat ModuleMap::total() const {
  Mat out(source.field(), target.total_dim(), source.total_dim());
  for (int v = 0; v < source.vertex_count(); ++v)
    if (source.dim(v) && target.dim(v)) out.set_block(target.offset(v), source.offset(v), components[static_cast<std::size_t>(v)]);
  return out;
}

Vec ModuleMap::apply(const Vec& x) const {
  Vec y(target.total_dim());
  for (int v = 0; v < source.vertex_count(); ++v) {
    if (!source.dim(v) || !target.dim(v)) continue;
    Vec yv = components[static_cast<std::size_t>(v)] * source.component(x, v);
    std::copy(yv.begin(), yv.end(), y.begin() + static_cast<long>(target.offset(v)));
  }
  return y;
}

bool ModuleMap::commutes() const {
  const Quiver& q = source.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto i = static_cast<std::size_t>(q.arrows[a].source), j = static_cast<std::size_t>(q.arrows[a].target);
    if (!(target.arrow(a) * components[i] == components[j] * source.arrow(a))) return false;
  }
  return true;
}

bool ModuleMap::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& c : components) r += qha::rank(c);
  return r;
}

bool ModuleMap::is_injective() const { return rank() == source.total_dim(); }
bool ModuleMap::is_surjective() const { return rank() == target.total_dim(); }

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  ModuleMap h = *this;
  for (std::size_t v = 0; v < components.size(); ++v) h.components[v] += o.components[v];
  return h;
}

ModuleMap ModuleMap::scaled(const Scalar& s) const {
  ModuleMap h = *this;
  for (auto& c : h.components) c = c.scaled(s);
  return h;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.target.dims() == g.source.dims())) throw std::invalid_argument("compose: shapes do not match");
  ModuleMap h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

ModuleMap inverse(const ModuleMap& f) {
  ModuleMap h{f.target, f.source, {}};
  for (const auto& c : f.components) {
    auto inv = qha::inverse(c);
    if (!inv) throw std::invalid_argument("inverse: module map is not bijective");
    h.components.push_back(std::move(*inv));
  }
  return h;
}

DirectSum direct_sum(const std::vector<Representation>& parts, const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  const auto nv = static_cast<std::size_t>(q.vertex_count);
  std::vector<std::size_t> dims(nv, 0);
  std::vector<std::vector<std::size_t>> off(parts.size(), std::vector<std::size_t>(nv, 0));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!parts[k].algebra()->same_as(*alg)) throw ValidationError("AlgebraMismatch", "summand over another algebra");
    for (std::size_t v = 0; v < nv; ++v) {
      off[k][v] = dims[v];
      dims[v] += parts[k].dims()[v];
    }
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto i = static_cast<std::size_t>(q.arrows[a].source), j = static_cast<std::size_t>(q.arrows[a].target);
    Mat m(f, dims[j], dims[i]);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const Mat& blk = parts[k].arrow(a);
      if (blk.rows() && blk.cols()) m.set_block(off[k][j], off[k][i], blk);
    }
    arrows.push_back(std::move(m));
  }
  DirectSum out{Representation(alg, dims, std::move(arrows)), {}, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    ModuleMap inj = ModuleMap::zero(parts[k], out.sum);
    ModuleMap proj = ModuleMap::zero(out.sum, parts[k]);
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t r = 0; r < parts[k].dims()[v]; ++r) {
        inj.components[v](off[k][v] + r, r) = 1;
        proj.components[v](r, off[k][v] + r) = 1;
      }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

ModuleMap block_map(const DirectSum& sources, const DirectSum& targets,
                    const std::vector<std::vector<ModuleMap>>& blocks) {
  ModuleMap h = ModuleMap::zero(sources.sum, targets.sum);
  for (std::size_t t = 0; t < blocks.size(); ++t)
    for (std::size_t s = 0; s < blocks[t].size(); ++s)
      h = h + compose(targets.injections[t], compose(blocks[t][s], sources.projections[s]));
  return h;
}

Vec AmbientModule::to_total(const Vec& ambient) const {
  Vec out(rep.total_dim());
  for (int v = 0; v < rep.vertex_count(); ++v) {
    if (!rep.dim(v)) continue;
    Vec c = coords[static_cast<std::size_t>(v)] * ambient;
    std::copy(c.begin(), c.end(), out.begin() + static_cast<long>(rep.offset(v)));
  }
  return out;
}

Vec AmbientModule::to_ambient(const Vec& total) const {
  Vec out;
  for (int v = 0; v < rep.vertex_count(); ++v) {
    Vec part = embed[static_cast<std::size_t>(v)] * rep.component(total, v);
    out = out.empty() ? part : vec_add(rep.field(), out, part);
  }
  return out;
}

Mat AmbientModule::to_ambient_matrix() const {
  Mat out;
  for (int v = 0; v < rep.vertex_count(); ++v) out = v == 0 ? embed[0] : Mat::hstack(out, embed[static_cast<std::size_t>(v)]);
  return out;
}

AmbientModule from_action(const AlgebraPtr& alg, const std::vector<Mat>& idempotents, const std::vector<Mat>& arrows) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  AmbientModule out;
  std::vector<std::size_t> dims;
  for (const auto& e : idempotents) {
    Mat basis = column_space(e).basis;
    auto y = solve(basis, e);
    if (!y) throw std::logic_error("from_action: idempotent image");
    dims.push_back(basis.cols());
    out.embed.push_back(std::move(basis));
    out.coords.push_back(std::move(*y));
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto i = static_cast<std::size_t>(q.arrows[a].source), j = static_cast<std::size_t>(q.arrows[a].target);
    Mat m = out.coords[j] * arrows[a] * out.embed[i];
    if (m.rows() != dims[j] || m.cols() != dims[i]) m = Mat(f, dims[j], dims[i]);
    mats.push_back(std::move(m));
  }
  out.rep = Representation(alg, std::move(dims), std::move(mats));
  return out;
}

RegularModule regular_module(const AlgebraPtr& alg) {
  const Field& f = alg->field();
  const std::size_t n = alg->dim();
  const auto nv = static_cast<std::size_t>(alg->vertex_count());
  std::vector<std::vector<std::size_t>> at(nv);
  for (std::size_t k = 0; k < n; ++k) at[static_cast<std::size_t>(alg->basis()[k].target)].push_back(k);
  std::vector<std::size_t> order, dims;
  for (const auto& v : at) {
    dims.push_back(v.size());
    order.insert(order.end(), v.begin(), v.end());
  }
  Mat to_alg(f, n, n);
  for (std::size_t t = 0; t < n; ++t) to_alg(order[t], t) = 1;
  Mat from_alg = to_alg.transpose();
  std::vector<Mat> arrows;
  const Quiver& q = alg->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto i = static_cast<std::size_t>(q.arrows[a].source), j = static_cast<std::size_t>(q.arrows[a].target);
    Mat m(f, dims[j], dims[i]);
    LinComb arrow{{Path::arrow(q, static_cast<int>(a)), Scalar(1)}};
    for (std::size_t c = 0; c < at[i].size(); ++c) {
      Vec prod = alg->coordinates(alg->product(arrow, LinComb{{alg->basis()[at[i][c]], Scalar(1)}}));
      for (std::size_t r = 0; r < at[j].size(); ++r) m(r, c) = prod[at[j][r]];
    }
    arrows.push_back(std::move(m));
  }
  return {Representation(alg, std::move(dims), std::move(arrows)), std::move(to_alg), std::move(from_alg)};
}

}  // namespace qha
