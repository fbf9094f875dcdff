#include "report.hpp"

namespace qha::cli {

Json scalar_json(const Scalar& s) { return s.str(); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

Json matrix_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

Json dims_json(const Representation& m) {
  Json out = Json::array();
  for (auto d : m.dims()) out.push_back(d);
  return out;
}

Json flags_json(const EpiFlags& f) {
  Json out;
  out["is_epi"] = f.is_epi;
  out["finite"] = f.finite;
  out["flat"] = f.flat;
  out["one_finite"] = f.one_finite;
  out["projective_dimension"] = f.projective_dimension ? Json(*f.projective_dimension) : Json(nullptr);
  out["homological"] = verdict_name(f.homological);
  out["tor"] = f.tor;
  return out;
}

Json algebra_json(const FDAlgebra& a) {
  Json out;
  out["dim"] = a.dim();
  out["labels"] = a.labels();
  out["unit"] = vec_json(a.unit());
  out["commutative"] = a.is_commutative();
  return out;
}

Json epi_json(const RingEpi& f) {
  Json out;
  out["dim_A"] = f.a->dim();
  out["dim_B"] = f.b.dim();
  out["b_module_dims"] = dims_json(f.b_mod);
  out["kernel_dim"] = f.kernel.rep.total_dim();
  out["cokernel_dim"] = f.cokernel.rep.total_dim();
  out["injective"] = f.kernel.rep.is_zero();
  out["surjective"] = f.cokernel.rep.is_zero();
  return out;
}

Json sigma_json(const std::vector<ProjMap>& sigma, const PathAlgebra& a) {
  Json out = Json::array();
  for (const auto& m : sigma) {
    Json j;
    j["name"] = m.name;
    Json src = Json::array(), tgt = Json::array(), entries = Json::array();
    for (int v : m.source) src.push_back(v + 1);
    for (int v : m.target) tgt.push_back(v + 1);
    for (const auto& row : m.entries) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(e.empty() ? "0" : lincomb_str(a.quiver(), e));
      entries.push_back(std::move(r));
    }
    j["source"] = src;
    j["target"] = tgt;
    j["entries"] = entries;
    out.push_back(std::move(j));
  }
  return out;
}

Json recollement_json(const RecollementReport& r) {
  Json out;
  out["verdict"] = r.verdict();
  out["failed"] = r.failed;
  out["provenance"] = provenance_name(r.provenance);
  out["label"] = r.label;
  out["left"] = {{"dim", r.f.b.dim()}};
  out["middle"] = {{"dim", r.f.a->dim()}};
  out["flags"] = flags_json(r.flags);
  out["hom_coker_ker"] = r.hom_coker_ker;
  if (r.resolution) {
    Json w;
    w["p_minus1_summands"] = r.resolution->minus1.summands.size();
    w["p_zero_summands"] = r.resolution->zero.summands.size();
    w["quasi_isomorphism"] = r.resolution_check.all();
    w["shift_minus1"] = r.shift_minus1;
    w["shift_plus1"] = r.shift_plus1;
    w["exceptional"] = r.exceptional;
    out["witness"] = std::move(w);
  }
  if (r.end) {
    out["right"] = algebra_json(r.end->ring);
    out["omega"] = {{"matrix", matrix_json(*r.omega)},
                    {"algebra_hom", r.omega_is_algebra_hom},
                    {"surjective", r.omega_surjective}};
  }
  if (r.trace) {
    Json t;
    Json v = Json::array();
    for (int x : r.trace->vertices) v.push_back(x + 1);
    t["vertices"] = v;
    t["dim"] = r.trace->in_algebra.cols();
    t["routes_agree"] = r.trace->routes_agree;
    t["kernel_of_omega"] = r.kernel_is_trace;
    t["quotient_dim"] = r.a_mod_trace ? Json(r.a_mod_trace->dim()) : Json(nullptr);
    t["isomorphism_verified"] = r.iso_verified;
    out["trace"] = std::move(t);
  }
  out["nontrivial"] = r.nontrivial();
  return out;
}

Json certificate_json(const LocalisationCertificate& c) {
  Json out;
  out["status"] = c.status;
  out["homological"] = verdict_name(c.flags.homological);
  out["universal_localisation"] = c.universal_localisation;
  out["tor_witness_degree"] = c.tor_witness ? Json(*c.tor_witness) : Json(nullptr);
  return out;
}

Json arrow_scan_json(const ArrowScan& s, const PathAlgebra& a) {
  Json out;
  out["arrow"] = a.quiver().arrows[static_cast<std::size_t>(s.arrow)].name;
  out["reflection_table"] = s.reflection_table;
  out["matrix_form"] = s.matrix_form;
  out["right_term_is_field"] = s.right_term_is_field;
  out["recollement"] = recollement_json(s.report);
  return out;
}

Json idempotent_scan_json(const IdempotentScan& s) {
  Json out;
  Json v = Json::array();
  for (int x : s.vertices) v.push_back(x + 1);
  out["vertices"] = v;
  out["stratifying"] = verdict_name(s.stratifying);
  out["tor"] = s.flags.tor;
  out["corner"] = algebra_json(s.corner);
  if (s.report) out["recollement"] = recollement_json(*s.report);
  return out;
}

}  // namespace qha::cli
