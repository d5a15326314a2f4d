#pragma once

#include <json.hpp>

#include "pk/connect.hpp"
#include "pk/homalg.hpp"

namespace pk {

using nlohmann::json;

// Structure files: {"vars": [...], "bivector": {"i,j": "<poly>"}} with
// 1-based index pairs. Unknown keys are rejected.
PoissonStructure structure_from_json(const json& j);
json structure_to_json(const PoissonStructure& P);

// Forms: {"k": 2, "coeffs": {"0,1": "<poly>"}} with 0-based increasing tuples.
KForm form_from_json(const json& j, const RingPtr& ring);
json form_to_json(const KForm& w);

// Connections: {"theta": <one-form>, "mode": "real"|"imaginary"}.
RankOneConnection connection_from_json(const json& j, const RingPtr& ring);
json connection_to_json(const RankOneConnection& c);

json dim_table_to_json(const DimTable& t);

}  // namespace pk
