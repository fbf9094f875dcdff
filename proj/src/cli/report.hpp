#pragma once

#include "json.hpp"

#include "qha/recollement/scan.hpp"

namespace qha::cli {

using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);
Json vec_json(const Vec& v);
Json matrix_json(const Mat& m);
Json dims_json(const Representation& m);
Json flags_json(const EpiFlags& f);
Json algebra_json(const FDAlgebra& a);
Json epi_json(const RingEpi& f);
Json sigma_json(const std::vector<ProjMap>& sigma, const PathAlgebra& a);
Json recollement_json(const RecollementReport& r);
Json certificate_json(const LocalisationCertificate& c);
Json arrow_scan_json(const ArrowScan& s, const PathAlgebra& a);
Json idempotent_scan_json(const IdempotentScan& s);

}  // namespace qha::cli
