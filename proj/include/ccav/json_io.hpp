#pragma once

#include <json.hpp>

#include "ccav/instance.hpp"
#include "ccav/reductions.hpp"

namespace ccav {

nlohmann::json instance_to_json(const ControlInstance& inst);
ControlInstance instance_from_json(const nlohmann::json& doc);

/// Parses and validates an instance document; throws ValidationError with the
/// path of the first violated invariant. A top-level "meta" object is ignored.
ControlInstance parse_instance(const std::string& text);

nlohmann::json solution_to_json(const Solution& solution, Rule rule);
std::vector<std::string> solution_selected_from_json(const nlohmann::json& doc);

SetCoverInput set_cover_from_json(const std::string& text);

/// Structural report: b, full-d, anonymity, single-peakedness and
/// single-crossing of (V union W) with certificates, registered scores.
nlohmann::json analyze_report(const ControlInstance& inst);

} // namespace ccav
