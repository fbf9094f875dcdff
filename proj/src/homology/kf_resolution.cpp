#include "qha/homology/kf_resolution.hpp"

#include "qha/error.hpp"

namespace qha {

KfResolution build_Kf_resolution(const ProjectiveSum& a, const ModuleMap& f) {
  const Representation& b = f.target;
  const AlgebraPtr& alg = b.algebra();
  ResolutionReport r = resolve(b, 2);
  if (r.capped())
    throw HypothesisError("ProjectiveDimensionTooLarge", "B has projective dimension at least 2 as a left module");
  const ProjectiveSum& p0 = r.terms[0];
  const ModuleMap& cover = r.differentials[0];
  ProjectiveSum p1 = r.terms.size() > 1 ? r.terms[1] : projective_sum(alg, {});

  // f̂: A → P_0 lifts f through the cover, generator by generator.
  std::vector<Vec> images;
  for (std::size_t t = 0; t < a.summands.size(); ++t) {
    const int v = a.summands[t];
    Vec x(p0.rep().dim(v));
    if (b.dim(v)) {
      Vec y = b.component(f.apply(a.generator(t)), v);
      auto sol = solve(cover.components[static_cast<std::size_t>(v)], Mat::column(b.field(), y));
      if (!sol) throw std::logic_error("build_Kf_resolution: projective cover is not surjective");
      x = sol->col(0);
    }
    images.push_back(p0.rep().embed(x, v));
  }
  for (std::size_t t = 0; t < p1.summands.size(); ++t) images.push_back(r.differentials[1].apply(p1.generator(t)));

  std::vector<int> summands = a.summands;
  summands.insert(summands.end(), p1.summands.begin(), p1.summands.end());
  KfResolution out;
  out.a = a;
  out.minus1 = projective_sum(alg, summands);
  out.zero = p0;
  out.p1_summands = p1.summands.size();
  ModuleMap g = map_from_projective_sum(out.minus1, p0.rep(), images);

  std::vector<Vec> onto_a;
  for (std::size_t t = 0; t < summands.size(); ++t)
    onto_a.push_back(t < a.summands.size() ? a.generator(t) : Vec(a.rep().total_dim()));
  ModuleMap q_minus1 = map_from_projective_sum(out.minus1, a.rep(), onto_a);

  out.kf = two_term(f, false);
  out.pf = two_term(g, true);
  out.q = ChainMap{0, {q_minus1, cover}};
  return out;
}

QuasiIsoCheck verify_resolution(const KfResolution& r) {
  QuasiIsoCheck out;
  const ModuleMap& f = r.kf.differential;
  const ModuleMap& g = r.pf.differential;
  const ModuleMap& q_minus1 = r.q.parts[0];
  const ModuleMap& cover = r.q.parts[1];
  out.chain_map = compose(f, q_minus1).total() == compose(cover, g).total();

  KernelCokernel kf = kernel_cokernel(f);
  KernelCokernel kg = kernel_cokernel(g);
  ModuleMap on_kernel = compose(q_minus1, kg.kernel.inclusion);
  out.h_minus1 = compose(f, on_kernel).is_zero() && on_kernel.is_injective() &&
                 on_kernel.rank() == kf.kernel.rep.total_dim();

  ModuleMap onto_coker = compose(kf.cokernel.projection, cover);
  out.h_zero = compose(onto_coker, g).is_zero() && onto_coker.is_surjective() &&
               kg.cokernel.rep.total_dim() == kf.cokernel.rep.total_dim();

  DirectSum mid = direct_sum({r.a.rep(), r.zero.rep()}, f.source.algebra());
  ModuleMap p1 = compose(mid.injections[0], q_minus1) + compose(mid.injections[1], g);
  ModuleMap p2 = compose(f, mid.projections[0]) + compose(cover, mid.projections[1]).scaled(f.source.field().neg(Scalar(1)));
  out.ses_exact = compose(p2, p1).is_zero() && p1.is_injective() && p2.is_surjective() &&
                  p1.rank() + p2.rank() == mid.sum.total_dim();
  return out;
}

}  // namespace qha
