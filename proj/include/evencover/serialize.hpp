#pragma once

#include <json.hpp>

#include "evencover/cleaning.hpp"
#include "evencover/kikuchi.hpp"
#include "evencover/walks.hpp"

namespace evencover {

nlohmann::json cover_to_json(const EvenCover& c, int walk_length = -1);
EvenCover cover_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const BucketDecomposition& d);
BucketDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json outcome_to_json(const cleaning::CleaningOutcome& o);

nlohmann::json stats_to_json(const kikuchi::KGraphStats& s);

nlohmann::json walk_to_json(const walks::ClosedWalk& w);
walks::ClosedWalk walk_from_json(const nlohmann::json& j);

}  // namespace evencover
