#include "qha/recollement/recollement.hpp"

#include <stdexcept>

namespace qha {

LocalisationCertificate certify_universal_localisation(const RingEpi& f, const Caps& caps) {
  LocalisationCertificate out;
  out.flags = classify(f, caps);
  for (std::size_t i = 0; i < out.flags.tor.size() && !out.tor_witness; ++i)
    if (out.flags.tor[i] != 0) out.tor_witness = i + 1;
  if (!out.flags.is_epi) {
    out.status = "NotEpi";
    return out;
  }
  if (!out.flags.one_finite) {
    out.status = "NotOneFinite";
    return out;
  }
  out.status = "certified";
  if (out.flags.homological == Verdict::yes) {
    SigmaExtraction ex = extract_sigma(f, caps);
    out.g = ex.g;
    RingEpi again = universal_localise(f.a, {ex.g}, caps);
    out.universal_localisation = epiclass_equal(f, again);
  }
  return out;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::user_sigma:
      return "user_sigma";
    case Provenance::arrow:
      return "arrow";
    case Provenance::idempotent:
      return "idempotent";
    case Provenance::given:
      break;
  }
  return "given";
}

Mat omega_matrix(const RingEpi& f, const KfResolution& r, const EndRing& end) {
  const FDAlgebra& alg = f.a->algebra();
  const Field& fld = alg.field();
  HomotopyHomSpace h = homotopy_hom(r.pf, r.kf, 0);
  const std::size_t n = end.space.dim;
  if (h.dim != n) throw std::logic_error("omega_matrix: q does not induce a bijection on homotopy classes");

  // Flattened chain maps P_f → K_f: q ∘ rep_k for the E basis, then ρ_a ∘ q.
  std::vector<Vec> cols;
  for (const auto& rep : end.space.representatives) cols.push_back(compose(r.q, rep).flatten());
  for (std::size_t w = 0; w < alg.dim(); ++w) {
    Vec x = alg.basis_vector(w);
    ModuleMap on_a = ModuleMap::from_total(f.a_sum.rep(), f.a_sum.rep(), f.a_to_sum * alg.right_mult(x) * f.sum_to_a);
    ModuleMap on_b = ModuleMap::from_total(f.b_mod, f.b_mod, f.b_to_mod * f.b.right_mult(f.f * x) * f.mod_to_b);
    cols.push_back(compose(ChainMap{0, {on_a, on_b}}, r.q).flatten());
  }
  const std::size_t length = h.reps_with_null.rows();
  auto sol = solve(h.reps_with_null, Mat::from_columns(fld, length, cols));
  if (!sol) throw std::logic_error("omega_matrix: a transported map is not a chain map");
  Mat coords = sol->block(h.null_rank, 0, n, cols.size());
  Mat transport = coords.block(0, 0, n, n);
  Mat rho = coords.block(0, n, n, alg.dim());
  if (n == 0) return rho;
  auto inv = inverse(transport);
  if (!inv) throw std::logic_error("omega_matrix: q ∘ - is not invertible on homotopy classes");
  return *inv * rho;
}

RecollementReport build_recollement(const RingEpi& f, const Caps& caps, Provenance provenance, std::string label) {
  RecollementReport out;
  out.provenance = provenance;
  out.label = std::move(label);
  out.f = f;
  out.flags = classify(f, caps);
  out.hom_coker_ker = hom_space(f.cokernel.rep, f.kernel.rep).size();
  if (!out.flags.is_epi) out.failed.emplace_back("epi");
  if (!out.flags.one_finite) out.failed.emplace_back("one_finite");
  if (out.flags.homological != Verdict::yes) out.failed.emplace_back("homological");
  if (out.hom_coker_ker != 0) out.failed.emplace_back("hom_coker_ker");
  if (!out.flags.one_finite) return out;

  out.resolution = build_Kf_resolution(f.a_sum, f.f_mod);
  const KfResolution& r = *out.resolution;
  out.resolution_check = verify_resolution(r);
  out.shift_minus1 = homotopy_hom(r.pf, r.kf, -1).dim;
  out.shift_plus1 = homotopy_hom(r.pf, r.kf, 1).dim;
  out.exceptional = out.shift_minus1 == 0 && out.shift_plus1 == 0;
  if (!out.failed.empty()) return out;

  out.end = homotopy_end_ring(r.pf);
  const FDAlgebra& alg = f.a->algebra();
  const FDAlgebra& e = out.end->ring;
  out.omega = omega_matrix(f, r, *out.end);
  out.omega_is_algebra_hom = is_algebra_hom(alg, e, *out.omega);
  out.omega_surjective = rank(*out.omega) == e.dim();

  if (out.flags.finite) {
    out.trace = trace_ideal(f);
    Mat ker = nullspace(*out.omega);
    out.kernel_is_trace = same_span(ker, out.trace->in_algebra);
    auto [quot, proj] = alg.quotient(out.trace->in_algebra);
    // h ∘ proj = Ω determines h on A/τ.
    auto ht = solve(proj.transpose(), out.omega->transpose());
    if (ht) {
      Mat h = ht->transpose();
      out.iso_verified = h.is_square() && h * proj == *out.omega && (h.rows() == 0 || inverse(h)) &&
                         is_algebra_hom(quot, e, h);
      out.iso = std::move(h);
    }
    out.a_mod_trace = std::move(quot);
  }
  return out;
}

}  // namespace qha
