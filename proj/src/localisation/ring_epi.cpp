#include "qha/localisation/ring_epi.hpp"

#include "qha/homology/tor.hpp"
#include "qha/modcat/tensor.hpp"

namespace qha {

namespace {

Vec unit_vector(const Field&, std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

Mat stacked_bases(const Field& f, std::size_t rows, const std::vector<Mat>& bases) {
  Mat out(f, rows, 0);
  for (const auto& b : bases) out = Mat::hstack(out, b);
  return out;
}

Mat invert(const Mat& m, const char* what) {
  if (m.rows() == 0 && m.cols() == 0) return m;
  auto inv = inverse(m);
  if (!inv) throw std::logic_error(std::string(what) + ": matrix is not invertible");
  return *inv;
}

Vec arrow_coords(const AlgebraPtr& a, std::size_t arrow) {
  return a->coordinates(LinComb{{Path::arrow(a->quiver(), static_cast<int>(arrow)), Scalar(1)}});
}

// A as ⊕ P_i: the word w: i → k sits in summand i at vertex k.
Mat sum_to_algebra(const AlgebraPtr& a, const ProjectiveSum& s) {
  Mat out(a->field(), a->dim(), s.rep().total_dim());
  for (std::size_t t = 0; t < s.summands.size(); ++t) {
    const int i = s.summands[t];
    const ModuleMap& inj = s.parts.injections[t];
    for (int k = 0; k < a->vertex_count(); ++k) {
      const auto& words = a->words_between(i, k);
      for (std::size_t r = 0; r < words.size(); ++r) {
        Vec tot = inj.apply(inj.source.embed(unit_vector(a->field(), words.size(), r), k));
        for (std::size_t c = 0; c < tot.size(); ++c)
          if (!tot[c].is_zero()) out(words[r], c) = 1;
      }
    }
  }
  return out;
}

// Module structure on B through f, left (x ↦ f(a)x) or right (x ↦ x f(a)).
struct Induced {
  Representation rep;
  Mat to_b;
  Mat from_b;
};

Induced induced_module(const AlgebraPtr& a, const FDAlgebra& b, const Mat& f, bool right) {
  const Field& fld = a->field();
  const int n = a->vertex_count();
  std::vector<Mat> bases;
  std::vector<std::size_t> dims, offsets;
  std::size_t off = 0;
  for (int k = 0; k < n; ++k) {
    Vec fe = f * a->algebra().basis_vector(a->vertex_index(k));
    bases.push_back(column_space(right ? b.right_mult(fe) : b.left_mult(fe)).basis);
    dims.push_back(bases.back().cols());
    offsets.push_back(off);
    off += dims.back();
  }
  Mat to_b = stacked_bases(fld, b.dim(), bases);
  Mat from_b = invert(to_b, "induced_module");
  std::vector<Mat> arrows;
  const auto& q = a->quiver();
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    // Left: α: s → t maps f(e_s)B → f(e_t)B. Right (over A^op): e_t-part → e_s-part.
    auto from = static_cast<std::size_t>(right ? q.arrows[ai].target : q.arrows[ai].source);
    auto to = static_cast<std::size_t>(right ? q.arrows[ai].source : q.arrows[ai].target);
    Mat m(fld, dims[to], dims[from]);
    if (dims[to] && dims[from]) {
      Vec fa = f * arrow_coords(a, ai);
      Mat act = from_b * ((right ? b.right_mult(fa) : b.left_mult(fa)) * bases[from]);
      m = act.block(offsets[to], 0, dims[to], dims[from]);
    }
    arrows.push_back(std::move(m));
  }
  return {Representation(right ? a->opposite() : a, dims, std::move(arrows)), std::move(to_b), std::move(from_b)};
}

}  // namespace

RingEpi make_ring_epi(const AlgebraPtr& a, FDAlgebra b, Mat f) {
  const FDAlgebra& alg = a->algebra();
  if (f.rows() != b.dim() || f.cols() != alg.dim())
    throw ValidationError("NotRingHom", "matrix of f has the wrong shape");
  if (!(f * alg.unit() == b.unit())) throw ValidationError("NotRingHom", "f(1) != 1");
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Vec fi = f.col(i);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Vec prod(alg.dim());
      for (const auto& [k, c] : alg.product(i, j)) prod[k] = c;
      if (!(f * prod == b.multiply(fi, f.col(j))))
        throw ValidationError("NotRingHom", "f is not multiplicative on " + alg.labels()[i] + ", " + alg.labels()[j]);
    }
  }
  RingEpi out;
  out.a = a;
  out.b = std::move(b);
  out.f = std::move(f);
  std::vector<int> all;
  for (int k = 0; k < a->vertex_count(); ++k) all.push_back(k);
  out.a_sum = projective_sum(a, all);
  out.sum_to_a = sum_to_algebra(a, out.a_sum);
  out.a_to_sum = invert(out.sum_to_a, "make_ring_epi");

  Induced left = induced_module(a, out.b, out.f, false);
  out.b_mod = std::move(left.rep);
  out.mod_to_b = std::move(left.to_b);
  out.b_to_mod = std::move(left.from_b);
  Induced right = induced_module(a, out.b, out.f, true);
  out.b_right = std::move(right.rep);
  out.right_to_b = std::move(right.to_b);
  out.b_to_right = std::move(right.from_b);

  out.f_mod = ModuleMap::from_total(out.a_sum.rep(), out.b_mod, out.b_to_mod * out.f * out.sum_to_a);
  KernelCokernel kc = kernel_cokernel(out.f_mod);
  out.kernel = std::move(kc.kernel);
  out.cokernel = std::move(kc.cokernel);
  return out;
}

RingEpi identity_epi(const AlgebraPtr& a) {
  return make_ring_epi(a, a->algebra(), Mat::identity(a->field(), a->dim()));
}

RingEpi universal_localise(const AlgebraPtr& a, const std::vector<ProjMap>& sigma, const Caps& caps) {
  const Field& fld = a->field();
  const int n = a->vertex_count();
  std::vector<ReflectionResult> refl;
  std::vector<Representation> parts;
  for (int i = 0; i < n; ++i) {
    refl.push_back(reflect(sigma, projective(a, i), caps));
    parts.push_back(refl.back().reflection);
  }
  DirectSum d = direct_sum(parts, a);
  const std::size_t dim = d.sum.total_dim();

  // f(x) for x ∈ Ae_i is ψ_{P_i}(x).
  Mat f(fld, dim, a->dim());
  std::vector<Vec> idem;
  for (std::size_t w = 0; w < a->dim(); ++w) {
    const Path& p = a->basis()[w];
    const auto i = static_cast<std::size_t>(p.source);
    const auto& words = a->words_between(p.source, p.target);
    std::size_t r = 0;
    while (words[r] != w) ++r;
    const Representation& pi = refl[i].unit.source;
    Vec img = d.injections[i].apply(refl[i].unit.apply(pi.embed(unit_vector(fld, words.size(), r), p.target)));
    for (std::size_t c = 0; c < dim; ++c) f(c, w) = img[c];
    if (p.is_trivial() && !vec_is_zero(img)) idem.push_back(img);
  }
  Vec u = f * a->algebra().unit();

  // B = End_A(B_mod)^op, identified with B_mod through φ ↦ φ(u).
  std::vector<ModuleMap> ends = hom_space(d.sum, d.sum);
  if (ends.size() != dim) throw std::logic_error("universal_localise: End(B) and B differ in dimension");
  std::vector<Vec> ev;
  std::vector<Mat> totals;
  for (const auto& h : ends) {
    ev.push_back(h.apply(u));
    totals.push_back(h.total());
  }
  Mat e_inv = invert(Mat::from_columns(fld, dim, ev), "universal_localise");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) labels.push_back("b" + std::to_string(k + 1));
  // x · y = φ_y(x)
  auto product = [&](std::size_t x, std::size_t y) {
    Vec out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const Scalar& c = e_inv(k, y);
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < dim; ++r) out[r] = fld.add(out[r], fld.mul(c, totals[k](r, x)));
    }
    return out;
  };
  FDAlgebra b = FDAlgebra::from_function(fld, std::move(labels), product, u, std::move(idem));
  RingEpi out = make_ring_epi(a, std::move(b), std::move(f));
  out.sigma = sigma;
  if (!in_X(sigma, out.b_mod)) throw std::logic_error("universal_localise: B ⊗ σ is not invertible");
  if (!is_ring_epi(out)) throw std::logic_error("universal_localise: A → A_Σ is not a ring epimorphism");
  return out;
}

RingEpi localise_at_modules(const AlgebraPtr& a, const std::vector<Representation>& modules, const Caps& caps) {
  std::vector<ProjMap> sigma;
  for (std::size_t k = 0; k < modules.size(); ++k)
    sigma.push_back(sigma_for_module(modules[k], "sigma_U" + std::to_string(k + 1)));
  return universal_localise(a, sigma, caps);
}

bool is_ring_epi(const RingEpi& f) { return tensor(f.b_right, f.cokernel.rep).dim() == 0; }

bool tensor_square_check(const RingEpi& f) { return tensor(f.b_right, f.b_mod).dim() == f.b.dim(); }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

EpiFlags classify(const RingEpi& f, const Caps& caps) {
  EpiFlags out;
  out.is_epi = is_ring_epi(f);
  out.finite = is_projective(f.b_mod);
  out.flat = true;
  AlgebraPtr op = f.a->opposite();
  for (int i = 0; i < f.a->vertex_count() && out.flat; ++i)
    if (tor(simple(op, i), f.b_mod, 1) != 0) out.flat = false;

  ResolutionReport r = resolve(f.b_mod, caps.resolution_cap);
  out.projective_dimension = r.projective_dimension;
  out.one_finite = r.projective_dimension && *r.projective_dimension <= 1;

  const std::size_t top = r.projective_dimension ? *r.projective_dimension : caps.resolution_cap;
  if (top > 0) {
    auto dims = tor_dims(f.b_right, f.b_mod, top);
    out.tor.assign(dims.begin() + 1, dims.end());
  }
  bool vanishes = true;
  for (auto t : out.tor) vanishes = vanishes && t == 0;
  if (!out.is_epi || !vanishes)
    out.homological = Verdict::no;
  else
    out.homological = r.projective_dimension ? Verdict::yes : Verdict::inconclusive;
  return out;
}

std::optional<Mat> comparison_map(const RingEpi& f, const RingEpi& g) {
  if (!f.a->same_as(*g.a)) throw ValidationError("AlgebraMismatch", "ring epimorphisms have different sources");
  const Field& fld = f.a->field();
  Vec uf = f.b_to_mod * f.b.unit();
  Vec ug = g.b_to_mod * g.b.unit();
  std::vector<ModuleMap> homs = hom_space(f.b_mod, g.b_mod);
  Mat h_total(fld, g.b_mod.total_dim(), f.b_mod.total_dim());
  if (homs.empty()) {
    if (!vec_is_zero(ug)) return std::nullopt;
  } else {
    std::vector<Vec> cols;
    for (const auto& h : homs) cols.push_back(h.apply(uf));
    auto sol = solve(Mat::from_columns(fld, g.b_mod.total_dim(), cols), Mat::column(fld, ug));
    if (!sol) return std::nullopt;
    for (std::size_t k = 0; k < homs.size(); ++k)
      if (!(*sol)(k, 0).is_zero()) h_total += homs[k].total().scaled((*sol)(k, 0));
  }
  return g.mod_to_b * h_total * f.b_to_mod;
}

bool epiclass_equal(const RingEpi& f, const RingEpi& g) {
  auto h = comparison_map(f, g);
  if (!h || !h->is_square()) return false;
  if (h->rows() > 0 && !inverse(*h)) return false;
  return is_algebra_hom(f.b, g.b, *h) && (*h) * f.f == g.f;
}

QuotientAndCorner quotient_and_corner(const AlgebraPtr& a, const std::vector<int>& vertices) {
  const FDAlgebra& alg = a->algebra();
  const Field& fld = a->field();
  std::vector<bool> in(static_cast<std::size_t>(a->vertex_count()), false);
  std::vector<Vec> gens;
  for (int v : vertices) {
    if (v < 0 || v >= a->vertex_count()) throw ValidationError("UnknownVertex", "no vertex " + std::to_string(v + 1));
    in[static_cast<std::size_t>(v)] = true;
    gens.push_back(alg.basis_vector(a->vertex_index(v)));
  }
  Mat ideal = gens.empty() ? Mat(fld, alg.dim(), 0) : alg.ideal_generated_by(gens);
  auto [quot, proj] = alg.quotient(ideal);
  RingEpi epi = make_ring_epi(a, std::move(quot), std::move(proj));

  std::vector<std::size_t> idx;
  for (std::size_t w = 0; w < a->dim(); ++w) {
    const Path& p = a->basis()[w];
    if (in[static_cast<std::size_t>(p.source)] && in[static_cast<std::size_t>(p.target)]) idx.push_back(w);
  }
  const std::size_t m = idx.size();
  Mat to_a(fld, a->dim(), m);
  std::vector<std::string> labels;
  Vec unit(m);
  std::vector<Vec> idem;
  for (std::size_t k = 0; k < m; ++k) {
    to_a(idx[k], k) = 1;
    const Path& p = a->basis()[idx[k]];
    labels.push_back(path_name(a->quiver(), p));
    if (p.is_trivial()) {
      unit[k] = 1;
      idem.push_back(unit_vector(fld, m, k));
    }
  }
  auto product = [&](std::size_t x, std::size_t y) {
    Vec full = alg.multiply(alg.basis_vector(idx[x]), alg.basis_vector(idx[y]));
    Vec out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = full[idx[k]];
    return out;
  };
  FDAlgebra corner = FDAlgebra::from_function(fld, std::move(labels), product, std::move(unit), std::move(idem));
  return {std::move(epi), std::move(corner), std::move(to_a)};
}

bool projective_divides(int i, const Representation& m) {
  Representation p = projective(m.algebra(), i);
  auto into = hom_space(p, m);
  if (into.empty()) return false;
  for (const auto& back : hom_space(m, p))
    for (const auto& phi : into)
      if (compose(back, phi).is_isomorphism()) return true;
  return false;
}

TraceIdeal trace_ideal(const RingEpi& f) {
  if (!is_projective(f.b_mod)) throw HypothesisError("NotFinite", "B is not projective as a left A-module");
  const FDAlgebra& alg = f.a->algebra();
  RegularModule reg = regular_module(f.a);
  TraceIdeal out;
  out.ideal = trace_submodule(f.b_mod, reg.rep);
  std::vector<Vec> gens;
  for (int i = 0; i < f.a->vertex_count(); ++i)
    if (projective_divides(i, f.b_mod)) {
      out.vertices.push_back(i);
      gens.push_back(alg.basis_vector(f.a->vertex_index(i)));
    }
  out.in_algebra = gens.empty() ? Mat(alg.field(), alg.dim(), 0) : alg.ideal_generated_by(gens);
  Mat via_trace = reg.to_algebra * out.ideal.inclusion.total();
  out.routes_agree = rank(via_trace) == out.in_algebra.cols() && in_span(out.in_algebra, via_trace);
  return out;
}

SigmaExtraction extract_sigma(const RingEpi& f, const Caps& caps) {
  EpiFlags flags = classify(f, caps);
  std::string failed;
  if (!flags.is_epi) failed += " epi";
  if (!flags.one_finite) failed += " one_finite";
  if (flags.homological != Verdict::yes) failed += " homological";
  if (!failed.empty()) throw HypothesisError("HypothesesNotMet", "failed:" + failed);

  SigmaExtraction out{{}, build_Kf_resolution(f.a_sum, f.f_mod), flags.finite, f.kernel.rep.is_zero(),
                      f.cokernel.rep.is_zero(), std::nullopt, std::nullopt, std::nullopt};
  out.g = from_module_map(out.resolution.minus1, out.resolution.zero, out.resolution.pf.differential, "g");
  if (out.finite) {
    ProjectiveCover cover = projective_cover(f.b_mod);
    out.finite_map = from_module_map(f.a_sum, cover.cover, compose(inverse(cover.map), f.f_mod), "f");
  }
  if (out.injective) out.module = f.cokernel.rep;
  if (out.surjective) {
    const FDAlgebra& alg = f.a->algebra();
    std::vector<int> s;
    std::vector<Vec> gens;
    for (int i = 0; i < f.a->vertex_count(); ++i) {
      Vec e = alg.basis_vector(f.a->vertex_index(i));
      if (vec_is_zero(f.f * e)) {
        s.push_back(i);
        gens.push_back(e);
      }
    }
    Mat ideal = gens.empty() ? Mat(alg.field(), alg.dim(), 0) : alg.ideal_generated_by(gens);
    Mat ker = f.sum_to_a * f.kernel.inclusion.total();
    if (rank(ker) == ideal.cols() && in_span(ideal, ker)) out.idempotent = s;
  }
  return out;
}

}  // namespace qha
