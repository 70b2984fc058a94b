#pragma once

#include <string>

#include <json.hpp>

#include "revlab/distance.hpp"
#include "revlab/set_operator.hpp"

namespace revlab {

// Distance file:  { "size": n, "labels": [...]?, "rank": [[...], ...] }
// Operator file:  { "size": n, "labels": [...]?,
//                   "entries": [ { "A": [...], "B": [...], "result": [...] }, ... ] }
// Index lists name universe elements 0..n-1. Loaders throw FormatError.

nlohmann::json distance_to_json(const PseudoDistance& d);
PseudoDistance distance_from_json(const nlohmann::json& doc);

nlohmann::json operator_to_json(const SetOperator& op);
SetOperator operator_from_json(const nlohmann::json& doc, SizeLimit limit = {});

nlohmann::json mask_to_json(SubsetMask m);

std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

}  // namespace revlab
