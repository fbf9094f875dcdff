#include "qha/recollement/scan.hpp"

namespace qha {

namespace {

std::string subset_label(const std::vector<int>& vertices) {
  std::string s = "e={";
  for (std::size_t k = 0; k < vertices.size(); ++k) s += (k ? "," : "") + std::to_string(vertices[k] + 1);
  return s + "}";
}

ProjMap arrow_star(const AlgebraPtr& a, int arrow) {
  const Arrow& ar = a->quiver().arrows[static_cast<std::size_t>(arrow)];
  return right_multiplication(a, LinComb{{Path::arrow(a->quiver(), arrow), Scalar(1)}}, ar.target, ar.source,
                              ar.name + "_star");
}

}  // namespace

ArrowConditions arrow_conditions(const AlgebraPtr& a, int arrow) {
  const Quiver& q = a->quiver();
  const Arrow& ar = q.arrows.at(static_cast<std::size_t>(arrow));
  int from_source = 0, into_target = 0;
  for (const auto& other : q.arrows) {
    if (other.source == ar.source) ++from_source;
    if (other.target == ar.target) ++into_target;
  }
  ArrowConditions out;
  out.unique_from_source = from_source == 1;
  out.unique_into_target = into_target == 1;
  out.no_relation_at_target = true;
  for (const auto& rel : a->presentation().relations)
    for (const auto& [p, c] : rel)
      if (p.target == ar.target) out.no_relation_at_target = false;
  return out;
}

ReflectionTable arrow_reflection_table(const AlgebraPtr& a, int arrow, const Caps& caps) {
  const Arrow& ar = a->quiver().arrows.at(static_cast<std::size_t>(arrow));
  std::vector<ProjMap> sigma{arrow_star(a, arrow)};
  ProjMapModules star = to_module_map(sigma[0], a);
  ReflectionTable out{true, false};
  for (int k = 0; k < a->vertex_count(); ++k) {
    if (k != ar.target) {
      out.table = out.table && reflect(sigma, projective_sum(a, {k}).rep(), caps).unit.is_isomorphism();
      continue;
    }
    ReflectionResult rj = reflect(sigma, star.source.rep(), caps);
    out.table = out.table && find_isomorphism(rj.reflection, star.target.rep()).has_value();
    // θ with θ ∘ ψ_j = α*, unique by the universal property.
    auto homs = hom_space(rj.reflection, star.target.rep());
    std::vector<Vec> cols;
    for (const auto& h : homs) cols.push_back(compose(h, rj.unit).total().entries());
    const Field& fld = a->field();
    const std::size_t len = star.map.total().entries().size();
    auto sol = solve(Mat::from_columns(fld, len, cols), Mat::column(fld, star.map.total().entries()));
    if (!sol) continue;
    ModuleMap theta = ModuleMap::zero(rj.reflection, star.target.rep());
    for (std::size_t t = 0; t < homs.size(); ++t)
      if (!(*sol)(t, 0).is_zero()) theta = theta + homs[t].scaled((*sol)(t, 0));
    out.matrix_form = theta.is_isomorphism();
  }
  return out;
}

std::vector<ArrowScan> scan_arrows(const AlgebraPtr& a, const Caps& caps) {
  std::vector<ArrowScan> out;
  for (std::size_t k = 0; k < a->quiver().arrows.size(); ++k) {
    const int arrow = static_cast<int>(k);
    ArrowConditions c = arrow_conditions(a, arrow);
    if (!c.all()) continue;
    ArrowScan s;
    s.arrow = arrow;
    s.conditions = c;
    s.sigma = {arrow_star(a, arrow)};
    ReflectionTable t = arrow_reflection_table(a, arrow, caps);
    s.reflection_table = t.table;
    s.matrix_form = t.matrix_form;
    s.report = build_recollement(universal_localise(a, s.sigma, caps), caps, Provenance::arrow,
                                 a->quiver().arrows[k].name);
    s.right_term_is_field = s.report.end && s.report.end->ring.dim() == 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<IdempotentScan> scan_stratifying(const AlgebraPtr& a, std::size_t tor_cap, const Caps& caps) {
  if (tor_cap == 0) throw ValidationError("InvalidCap", "tor cap must be at least 1");
  Caps c = caps;
  c.resolution_cap = tor_cap;
  const int n = a->vertex_count();
  std::vector<IdempotentScan> out;
  if (n > 20) throw CapExceeded("TooManySubsets", "stratifying scan is limited to 20 vertices");
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    IdempotentScan s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.vertices.push_back(v);
    QuotientAndCorner qc = quotient_and_corner(a, s.vertices);
    s.flags = classify(qc.quotient, c);
    s.stratifying = s.flags.homological;
    s.corner = std::move(qc.corner);
    if (s.stratifying == Verdict::yes)
      s.report = build_recollement(qc.quotient, c, Provenance::idempotent, subset_label(s.vertices));
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<DerivedSimplicityWitness> derived_simplicity_witness(const AlgebraPtr& a, const Caps& caps) {
  for (auto& s : scan_arrows(a, caps))
    if (s.report.nontrivial()) return DerivedSimplicityWitness{Provenance::arrow, s.report.label, std::move(s.report)};
  for (auto& s : scan_stratifying(a, caps.resolution_cap, caps))
    if (s.report && s.report->nontrivial())
      return DerivedSimplicityWitness{Provenance::idempotent, s.report->label, std::move(*s.report)};
  return std::nullopt;
}

}  // namespace qha
