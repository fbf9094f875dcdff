#include "qha/modcat/morphisms.hpp"

#include <random>

#include "qha/error.hpp"

namespace qha {

namespace {

Mat span_of(const Mat& a, const Mat& b) {
  if (b.cols() == 0) return a;
  if (a.cols() == 0) return column_space(b).basis;
  return column_space(Mat::hstack(a, b)).basis;
}

}  // namespace

HomSystem hom_system(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  HomSystem s{m, n, {}, 0, {}};
  const Field& f = m.field();
  for (int v = 0; v < m.vertex_count(); ++v) {
    s.offsets.push_back(s.unknowns);
    s.unknowns += n.dim(v) * m.dim(v);
  }
  const Quiver& q = m.algebra()->quiver();
  std::size_t rows = 0;
  for (const auto& a : q.arrows) rows += n.dim(a.target) * m.dim(a.source);
  s.equations = Mat(f, rows, s.unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int i = q.arrows[a].source, j = q.arrows[a].target;
    const Mat& na = n.arrow(a);
    const Mat& ma = m.arrow(a);
    const std::size_t mi = m.dim(i), mj = m.dim(j), ni = n.dim(i), nj = n.dim(j);
    const std::size_t oi = s.offsets[static_cast<std::size_t>(i)], oj = s.offsets[static_cast<std::size_t>(j)];
    // (N_α X_i − X_j M_α)(r, c) = 0
    for (std::size_t r = 0; r < nj; ++r)
      for (std::size_t c = 0; c < mi; ++c, ++row) {
        for (std::size_t k = 0; k < ni; ++k)
          if (!na(r, k).is_zero()) s.equations(row, oi + k * mi + c) = f.add(s.equations(row, oi + k * mi + c), na(r, k));
        for (std::size_t k = 0; k < mj; ++k)
          if (!ma(k, c).is_zero())
            s.equations(row, oj + r * mj + k) = f.sub(s.equations(row, oj + r * mj + k), ma(k, c));
      }
  }
  return s;
}

ModuleMap HomSystem::to_map(const Mat& column) const {
  ModuleMap h = ModuleMap::zero(source, target);
  for (int v = 0; v < source.vertex_count(); ++v) {
    const std::size_t rows = target.dim(v), cols = source.dim(v), off = offsets[static_cast<std::size_t>(v)];
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) h.components[static_cast<std::size_t>(v)](r, c) = column(off + r * cols + c, 0);
  }
  return h;
}

Mat HomSystem::to_column(const ModuleMap& h) const {
  Mat x(source.field(), unknowns, 1);
  for (int v = 0; v < source.vertex_count(); ++v) {
    const std::size_t rows = target.dim(v), cols = source.dim(v), off = offsets[static_cast<std::size_t>(v)];
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) x(off + r * cols + c, 0) = h.components[static_cast<std::size_t>(v)](r, c);
  }
  return x;
}

Mat HomSystem::evaluation(const Vec& x) const {
  Mat e(source.field(), target.total_dim(), unknowns);
  for (int v = 0; v < source.vertex_count(); ++v) {
    const std::size_t rows = target.dim(v), cols = source.dim(v), off = offsets[static_cast<std::size_t>(v)];
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) e(target.offset(v) + r, off + r * cols + c) = x[source.offset(v) + c];
  }
  return e;
}

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  HomSystem s = hom_system(m, n);
  Mat k = nullspace(s.equations);
  std::vector<ModuleMap> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(s.to_map(k.block(0, c, k.rows(), 1)));
  return out;
}

Subobject subrepresentation(const Representation& m, const std::vector<Mat>& bases) {
  const Quiver& q = m.algebra()->quiver();
  const Field& f = m.field();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto i = static_cast<std::size_t>(q.arrows[a].source), j = static_cast<std::size_t>(q.arrows[a].target);
    if (dims[i] == 0 || dims[j] == 0) {
      if (dims[i] && !(m.arrow(a) * bases[i]).is_zero())
        throw std::logic_error("subrepresentation: subspaces not closed under arrows");
      arrows.emplace_back(f, dims[j], dims[i]);
      continue;
    }
    auto y = solve(bases[j], m.arrow(a) * bases[i]);
    if (!y) throw std::logic_error("subrepresentation: subspaces not closed under arrows");
    arrows.push_back(std::move(*y));
  }
  Representation sub(m.algebra(), dims, std::move(arrows));
  ModuleMap inc{sub, m, bases};
  return {std::move(sub), std::move(inc)};
}

Quotient quotient(const Representation& m, const std::vector<Mat>& bases) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<QuotientCoordinates> qc;
  std::vector<std::size_t> dims;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const Mat& b = bases[static_cast<std::size_t>(v)];
    qc.push_back(quotient_coordinates(b.rows() == m.dim(v) ? b : Mat(m.field(), m.dim(v), 0), m.dim(v)));
    dims.push_back(qc.back().projection.rows());
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto i = static_cast<std::size_t>(q.arrows[a].source), j = static_cast<std::size_t>(q.arrows[a].target);
    arrows.push_back(qc[j].projection * m.arrow(a) * qc[i].lift);
  }
  Representation rep(m.algebra(), dims, std::move(arrows));
  Quotient out{rep, ModuleMap{m, rep, {}}, {}};
  for (auto& c : qc) {
    out.projection.components.push_back(std::move(c.projection));
    out.lifts.push_back(std::move(c.lift));
  }
  return out;
}

std::vector<Mat> generated_subspaces(const Representation& m, const std::vector<Vec>& generators) {
  const Field& f = m.field();
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> span;
  for (int v = 0; v < m.vertex_count(); ++v) {
    std::vector<Vec> cols;
    for (const auto& g : generators) {
      Vec c = m.component(g, v);
      if (!vec_is_zero(c)) cols.push_back(std::move(c));
    }
    span.push_back(cols.empty() ? Mat(f, m.dim(v), 0) : column_space(Mat::from_columns(f, m.dim(v), cols)).basis);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const auto i = static_cast<std::size_t>(q.arrows[a].source), j = static_cast<std::size_t>(q.arrows[a].target);
      if (span[i].cols() == 0 || span[j].cols() == m.dims()[j]) continue;
      Mat next = span_of(span[j], m.arrow(a) * span[i]);
      if (next.cols() > span[j].cols()) {
        span[j] = std::move(next);
        changed = true;
      }
    }
  }
  return span;
}

std::vector<Mat> image_subspaces(const ModuleMap& h) {
  std::vector<Mat> out;
  for (const auto& c : h.components) out.push_back(column_space(c).basis);
  return out;
}

std::vector<Mat> full_subspaces(const Representation& m) {
  std::vector<Mat> out;
  for (int v = 0; v < m.vertex_count(); ++v) out.push_back(Mat::identity(m.field(), m.dim(v)));
  return out;
}

KernelCokernel kernel_cokernel(const ModuleMap& h) {
  std::vector<Mat> ker;
  for (const auto& c : h.components) ker.push_back(nullspace(c));
  std::vector<Mat> im = image_subspaces(h);
  return {subrepresentation(h.source, ker), quotient(h.target, im), subrepresentation(h.target, im)};
}

Subobject trace_submodule(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  std::vector<Mat> span;
  for (int v = 0; v < n.vertex_count(); ++v) span.emplace_back(n.field(), n.dim(v), 0);
  for (const auto& h : hom_space(m, n))
    for (std::size_t v = 0; v < span.size(); ++v)
      span[v] = span_of(span[v], h.components[v]);
  return subrepresentation(n, span);
}

std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return std::nullopt;
  auto basis = hom_space(m, n);
  if (m.total_dim() == 0) return ModuleMap::zero(m, n);
  for (const auto& h : basis)
    if (h.is_isomorphism()) return h;
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(0x15015);
  std::uniform_int_distribution<long long> coeff(-1000, 1000);
  const Field& f = m.field();
  for (int attempt = 0; attempt < 12; ++attempt) {
    ModuleMap h = ModuleMap::zero(m, n);
    for (const auto& b : basis) h = h + b.scaled(f.from_int(coeff(rng)));
    if (h.is_isomorphism()) return h;
  }
  return std::nullopt;
}

}  // namespace qha
