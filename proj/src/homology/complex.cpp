#include "qha/homology/complex.hpp"

#include <stdexcept>

namespace qha {

namespace {

Vec flat(const Mat& m) { return m.entries(); }

ModuleMap combination(const std::vector<ModuleMap>& basis, const Mat& coeffs, std::size_t col, std::size_t offset,
                      const Representation& s, const Representation& t) {
  ModuleMap h = ModuleMap::zero(s, t);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Scalar& c = coeffs(offset + k, col);
    if (!c.is_zero()) h = h + basis[k].scaled(c);
  }
  return h;
}

Mat flat_columns(const Field& f, std::size_t length, const std::vector<ChainMap>& maps) {
  std::vector<Vec> cols;
  for (const auto& m : maps) cols.push_back(m.flatten());
  return Mat::from_columns(f, length, cols);
}

std::size_t flat_length(const std::vector<std::pair<const Representation*, const Representation*>>& shapes) {
  std::size_t n = 0;
  for (const auto& [s, t] : shapes) n += s->total_dim() * t->total_dim();
  return n;
}

}  // namespace

TwoTermComplex two_term(const ModuleMap& d, bool projective_terms) { return {d.source, d.target, d, projective_terms}; }

Vec ChainMap::flatten() const {
  Vec out;
  for (const auto& p : parts) {
    Vec v = flat(p.total());
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

ChainMap identity_chain_map(const TwoTermComplex& c) {
  return {0, {ModuleMap::identity(c.minus1), ModuleMap::identity(c.zero)}};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (g.shift != 0 || f.shift != 0) throw std::logic_error("compose: only shift-0 chain maps compose");
  return {0, {compose(g.parts[0], f.parts[0]), compose(g.parts[1], f.parts[1])}};
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  ChainMap out{a.shift, {}};
  for (std::size_t k = 0; k < a.parts.size(); ++k) out.parts.push_back(a.parts[k] + b.parts[k]);
  return out;
}

ChainMap scaled(const ChainMap& a, const Scalar& s) {
  ChainMap out{a.shift, {}};
  for (const auto& p : a.parts) out.parts.push_back(p.scaled(s));
  return out;
}

Vec HomotopyHomSpace::coordinates(const ChainMap& x) const {
  auto sol = solve(reps_with_null, Mat::column(reps_with_null.field(), x.flatten()));
  if (!sol) throw std::logic_error("HomotopyHomSpace::coordinates: not a chain map of this space");
  Vec out;
  for (std::size_t k = null_rank; k < sol->rows(); ++k) out.push_back((*sol)(k, 0));
  return out;
}

bool HomotopyHomSpace::is_null_homotopic(const ChainMap& x) const { return vec_is_zero(coordinates(x)); }

HomotopyHomSpace homotopy_hom(const TwoTermComplex& p, const TwoTermComplex& c, int shift) {
  HomotopyHomSpace out;
  out.shift = shift;
  const Field& f = p.minus1.field();
  const ModuleMap& dp = p.differential;
  const ModuleMap& dc = c.differential;
  std::size_t length = 0;

  if (shift == 0) {
    length = flat_length({{&p.minus1, &c.minus1}, {&p.zero, &c.zero}});
    auto h1 = hom_space(p.minus1, c.minus1);
    auto h0 = hom_space(p.zero, c.zero);
    // d_C ∘ u_{-1} − u_0 ∘ d_P = 0
    std::vector<Vec> cols;
    for (const auto& a : h1) cols.push_back(flat(compose(dc, a).total()));
    for (const auto& b : h0) cols.push_back(flat(compose(b, dp).scaled(f.neg(Scalar(1))).total()));
    Mat system = Mat::from_columns(f, p.minus1.total_dim() * c.zero.total_dim(), cols);
    Mat ker = nullspace(system);
    for (std::size_t k = 0; k < ker.cols(); ++k)
      out.chain_basis.push_back({0,
                                 {combination(h1, ker, k, 0, p.minus1, c.minus1),
                                  combination(h0, ker, k, h1.size(), p.zero, c.zero)}});
    for (const auto& s : hom_space(p.zero, c.minus1)) out.null_basis.push_back({0, {compose(s, dp), compose(dc, s)}});
  } else if (shift == 1) {
    length = flat_length({{&p.minus1, &c.zero}});
    for (const auto& h : hom_space(p.minus1, c.zero)) out.chain_basis.push_back({1, {h}});
    for (const auto& a : hom_space(p.minus1, c.minus1)) out.null_basis.push_back({1, {compose(dc, a)}});
    for (const auto& b : hom_space(p.zero, c.zero)) out.null_basis.push_back({1, {compose(b, dp)}});
  } else if (shift == -1) {
    length = flat_length({{&p.zero, &c.minus1}});
    auto s = hom_space(p.zero, c.minus1);
    // d_C ∘ u = 0 and u ∘ d_P = 0; nothing is null-homotopic.
    std::vector<Vec> cols;
    for (const auto& u : s) {
      Vec v = flat(compose(dc, u).total());
      Vec w = flat(compose(u, dp).total());
      v.insert(v.end(), w.begin(), w.end());
      cols.push_back(std::move(v));
    }
    Mat system = Mat::from_columns(
        f, p.zero.total_dim() * c.zero.total_dim() + p.minus1.total_dim() * c.minus1.total_dim(), cols);
    Mat ker = nullspace(system);
    for (std::size_t k = 0; k < ker.cols(); ++k)
      out.chain_basis.push_back({-1, {combination(s, ker, k, 0, p.zero, c.minus1)}});
  } else {
    out.reps_with_null = Mat(f, 0, 0);
    return out;
  }

  Mat null_basis = column_space(flat_columns(f, length, out.null_basis)).basis;
  out.null_rank = null_basis.cols();
  ColumnBasis cs = column_space(Mat::hstack(null_basis, flat_columns(f, length, out.chain_basis)));
  std::vector<Vec> rep_cols;
  for (std::size_t idx : cs.indices)
    if (idx >= out.null_rank) {
      out.representatives.push_back(out.chain_basis[idx - out.null_rank]);
      rep_cols.push_back(out.representatives.back().flatten());
    }
  out.dim = out.representatives.size();
  out.reps_with_null = Mat::hstack(null_basis, Mat::from_columns(f, length, rep_cols));
  return out;
}

EndRing homotopy_end_ring(const TwoTermComplex& p) {
  EndRing out{homotopy_hom(p, p, 0), {}};
  const auto& reps = out.space.representatives;
  const std::size_t n = reps.size();
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("h" + std::to_string(k + 1));
  Vec unit = out.space.coordinates(identity_chain_map(p));
  std::vector<Vec> idem;
  if (n) idem.push_back(unit);
  out.ring = FDAlgebra::from_function(
      p.minus1.field(), std::move(labels),
      [&](std::size_t a, std::size_t b) { return out.space.coordinates(compose(reps[b], reps[a])); }, unit,
      std::move(idem));
  if (!out.ring.is_associative() || !out.ring.is_unital())
    throw std::logic_error("homotopy_end_ring: composition is not associative modulo homotopy");
  return out;
}

}  // namespace qha
