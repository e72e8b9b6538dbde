#pragma once

#include "toric/mirrorweb.hpp"

#include <json.hpp>

namespace toric {

using json = nlohmann::json;

// Numbers are written as decimal strings; index sets are 1-based.
json to_json(const Int& x);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);  // array of rows
json to_json(const RatVector& v);  // "p/q" entries
json to_json(const RatPolytope& p);
json to_json(const MonomialIdeal& ideal);
json to_json(const ClassGroupData& cg);
json to_json(const MirrorModel& m);
json to_json(const AdmissibleW& w);

IndexSet parse_one_based(const json& j);
Int parse_int(const json& j);  // accepts numbers and decimal strings
IntMatrix parse_matrix(const json& j);
IntVector parse_vector(const json& j);
// {"fan_matrix": [[...]], "blocks": [[...], ...]}
PartitionedFtv parse_ftv(const json& j);

std::string subset_key(const IndexSet& a);  // sorted comma-joined, 1-based

}  // namespace toric
