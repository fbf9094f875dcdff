#include "qha/modcat/tensor.hpp"

#include "qha/error.hpp"

namespace qha {

TensorProduct tensor(const Representation& right, const Representation& left) {
  const AlgebraPtr& alg = left.algebra();
  if (!right.algebra() || !right.algebra()->same_as(*alg->opposite()))
    throw ValidationError("AlgebraMismatch", "the first factor must be a module over the opposite algebra");
  const Field& f = alg->field();
  const Quiver& q = alg->quiver();
  TensorProduct t{right, left, {}, 0, {}, {}};
  for (int v = 0; v < alg->vertex_count(); ++v) {
    t.offsets.push_back(t.ambient);
    t.ambient += right.dim(v) * left.dim(v);
  }
  // For α: i → j, m ∈ M_j, n ∈ N_i: (m·α) ⊗ n − m ⊗ (α·n), with m·α ∈ M_i.
  std::size_t relators = 0;
  for (const auto& a : q.arrows) relators += right.dim(a.target) * left.dim(a.source);
  Mat rel(f, t.ambient, relators);
  std::size_t col = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int i = q.arrows[a].source, j = q.arrows[a].target;
    const Mat& ma = right.arrow(a);  // M_j → M_i
    const Mat& na = left.arrow(a);   // N_i → N_j
    const std::size_t mi = right.dim(i), mj = right.dim(j), ni = left.dim(i), nj = left.dim(j);
    const std::size_t oi = t.offsets[static_cast<std::size_t>(i)], oj = t.offsets[static_cast<std::size_t>(j)];
    for (std::size_t m = 0; m < mj; ++m)
      for (std::size_t n = 0; n < ni; ++n, ++col) {
        for (std::size_t r = 0; r < mi; ++r)
          if (!ma(r, m).is_zero()) rel(oi + r * ni + n, col) = f.add(rel(oi + r * ni + n, col), ma(r, m));
        for (std::size_t r = 0; r < nj; ++r)
          if (!na(r, n).is_zero()) rel(oj + m * nj + r, col) = f.sub(rel(oj + m * nj + r, col), na(r, n));
      }
  }
  QuotientCoordinates qc = quotient_coordinates(rel, t.ambient);
  t.projection = std::move(qc.projection);
  t.lift = std::move(qc.lift);
  return t;
}

namespace {

Mat ambient_map(const TensorProduct& from, const TensorProduct& to, const std::vector<Mat>& blocks) {
  Mat out(from.left.field(), to.ambient, from.ambient);
  for (std::size_t v = 0; v < blocks.size(); ++v)
    if (blocks[v].rows() && blocks[v].cols()) out.set_block(to.offsets[v], from.offsets[v], blocks[v]);
  return out;
}

}  // namespace

Mat tensor_map_left(const TensorProduct& from, const TensorProduct& to, const ModuleMap& h) {
  std::vector<Mat> blocks;
  for (int v = 0; v < from.left.vertex_count(); ++v)
    blocks.push_back(Mat::identity(from.right.field(), from.right.dim(v)).kron(h.components[static_cast<std::size_t>(v)]));
  return to.projection * ambient_map(from, to, blocks) * from.lift;
}

Mat tensor_map_right(const TensorProduct& from, const TensorProduct& to, const ModuleMap& h) {
  std::vector<Mat> blocks;
  for (int v = 0; v < from.left.vertex_count(); ++v)
    blocks.push_back(h.components[static_cast<std::size_t>(v)].kron(Mat::identity(from.left.field(), from.left.dim(v))));
  return to.projection * ambient_map(from, to, blocks) * from.lift;
}

}  // namespace qha
