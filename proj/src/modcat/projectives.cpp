#include "qha/modcat/projectives.hpp"

#include "qha/error.hpp"

namespace qha {

Representation projective(const AlgebraPtr& alg, int i) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  const int nv = alg->vertex_count();
  if (i < 0 || i >= nv) throw ValidationError("UnknownVertex", "no vertex " + std::to_string(i + 1));
  std::vector<std::size_t> dims;
  for (int k = 0; k < nv; ++k) dims.push_back(alg->words_between(i, k).size());
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int s = q.arrows[a].source, t = q.arrows[a].target;
    const auto& from = alg->words_between(i, s);
    const auto& to = alg->words_between(i, t);
    Mat m(f, to.size(), from.size());
    LinComb arrow{{Path::arrow(q, static_cast<int>(a)), Scalar(1)}};
    for (std::size_t c = 0; c < from.size(); ++c) {
      Vec prod = alg->coordinates(alg->product(arrow, LinComb{{alg->basis()[from[c]], Scalar(1)}}));
      for (std::size_t r = 0; r < to.size(); ++r) m(r, c) = prod[to[r]];
    }
    arrows.push_back(std::move(m));
  }
  return {alg, std::move(dims), std::move(arrows)};
}

Representation simple(const AlgebraPtr& alg, int i) {
  if (i < 0 || i >= alg->vertex_count()) throw ValidationError("UnknownVertex", "no vertex " + std::to_string(i + 1));
  std::vector<std::size_t> dims(static_cast<std::size_t>(alg->vertex_count()), 0);
  dims[static_cast<std::size_t>(i)] = 1;
  std::vector<Mat> arrows;
  for (const auto& a : alg->quiver().arrows)
    arrows.emplace_back(alg->field(), dims[static_cast<std::size_t>(a.target)], dims[static_cast<std::size_t>(a.source)]);
  return {alg, std::move(dims), std::move(arrows)};
}

Vec projective_generator(const Representation& p_i, int i) {
  Vec g(p_i.total_dim());
  g[p_i.offset(i)] = 1;
  return g;
}

ModuleMap map_from_projective(const Representation& p_i, int i, const Representation& m, const Vec& m_at_i) {
  const AlgebraPtr& alg = p_i.algebra();
  ModuleMap h = ModuleMap::zero(p_i, m);
  for (int k = 0; k < alg->vertex_count(); ++k) {
    const auto& words = alg->words_between(i, k);
    for (std::size_t c = 0; c < words.size(); ++c) {
      Vec img = m.path_action(alg->basis()[words[c]]) * m_at_i;
      for (std::size_t r = 0; r < img.size(); ++r) h.components[static_cast<std::size_t>(k)](r, c) = img[r];
    }
  }
  return h;
}

Vec ProjectiveSum::generator(std::size_t t) const {
  const Representation& p = parts.injections[t].source;
  return parts.injections[t].apply(projective_generator(p, summands[t]));
}

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& summands) {
  std::vector<Representation> ps;
  for (int i : summands) ps.push_back(projective(alg, i));
  return {summands, direct_sum(ps, alg)};
}

ModuleMap map_from_projective_sum(const ProjectiveSum& p, const Representation& m, const std::vector<Vec>& images) {
  ModuleMap h = ModuleMap::zero(p.rep(), m);
  for (std::size_t t = 0; t < p.summands.size(); ++t) {
    const int i = p.summands[t];
    ModuleMap part = map_from_projective(p.parts.injections[t].source, i, m, m.component(images[t], i));
    h = h + compose(part, p.parts.projections[t]);
  }
  return h;
}

std::vector<Mat> radical_subspaces(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> rad;
  for (int v = 0; v < m.vertex_count(); ++v) {
    Mat span(m.field(), m.dim(v), 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].target == v && m.arrow(a).cols() > 0) span = Mat::hstack(span, m.arrow(a));
    rad.push_back(column_space(span).basis);
  }
  return rad;
}

std::vector<std::size_t> top_dims(const Representation& m) {
  auto rad = radical_subspaces(m);
  std::vector<std::size_t> out;
  for (int v = 0; v < m.vertex_count(); ++v) out.push_back(m.dim(v) - rad[static_cast<std::size_t>(v)].cols());
  return out;
}

ProjectiveCover projective_cover(const Representation& m) {
  auto rad = radical_subspaces(m);
  std::vector<int> summands;
  std::vector<Vec> images;
  for (int v = 0; v < m.vertex_count(); ++v) {
    QuotientCoordinates qc = quotient_coordinates(rad[static_cast<std::size_t>(v)], m.dim(v));
    for (std::size_t k = 0; k < qc.lift.cols(); ++k) {
      summands.push_back(v);
      images.push_back(m.embed(qc.lift.col(k), v));
    }
  }
  ProjectiveSum p = projective_sum(m.algebra(), summands);
  ModuleMap map = map_from_projective_sum(p, m, images);
  return {std::move(p), std::move(map)};
}

bool is_projective(const Representation& m) {
  return projective_cover(m).cover.rep().total_dim() == m.total_dim();
}

ResolutionReport resolve(const Representation& m, std::size_t cap) {
  if (cap < 1) throw ValidationError("InvalidCap", "resolution cap must be positive");
  ResolutionReport r;
  r.cap = cap;
  Representation current = m;
  ModuleMap into_previous = ModuleMap::identity(m);  // Ω^k M → P_{k-1}
  for (std::size_t k = 0; k < cap; ++k) {
    ProjectiveCover pc = projective_cover(current);
    r.differentials.push_back(compose(into_previous, pc.map));
    r.terms.push_back(pc.cover);
    KernelCokernel kc = kernel_cokernel(pc.map);
    if (kc.kernel.rep.is_zero()) {
      r.projective_dimension = m.is_zero() ? 0 : k;
      return r;
    }
    r.syzygies.push_back(kc.kernel);
    current = kc.kernel.rep;
    into_previous = kc.kernel.inclusion;
  }
  return r;
}

}  // namespace qha
