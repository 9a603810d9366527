#pragma once

#include <json.hpp>

#include "lb/bialg.hpp"
#include "lb/classify.hpp"
#include "lb/cohom.hpp"

namespace lb {

using json = nlohmann::ordered_json;

json label_to_json(const CatalogLabel& l);
CatalogLabel label_from_json(const json& j);

json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const json& j);

// {"algebra": ..., "cobracket": [["a1","b1","c1"], ...]}; the pair is
// returned unvalidated so callers can report residuals.
json bialgebra_to_json(const LieAlgebra& g, const Cobracket& d);
std::pair<LieAlgebra, Cobracket> bialgebra_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json tag_to_json(const ClassTag& t);
json derivation_report_to_json(const DerivationReport& r);
json cohomology_report_to_json(const CohomologyReport& r);
json orbit_report_to_json(const OrbitCheckReport& r);

}  // namespace lb
