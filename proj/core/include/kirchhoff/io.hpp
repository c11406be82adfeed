#pragma once

#include <nlohmann/json.hpp>

#include "kirchhoff/branches.hpp"
#include "kirchhoff/constants.hpp"
#include "kirchhoff/fibering.hpp"
#include "kirchhoff/ground_state.hpp"
#include "kirchhoff/nonauto1d.hpp"
#include "kirchhoff/params.hpp"
#include "kirchhoff/probes.hpp"

namespace kirchhoff {

using json = nlohmann::ordered_json;

void to_json(json& j, const ProblemParams& p);
void to_json(json& j, const FunctionData& d);
/// Summary without the profile samples.
void to_json(json& j, const GroundState& gs);
void to_json(json& j, const ThresholdSet& t);
void to_json(json& j, const BranchSolution& s);
void to_json(json& j, const BranchDiagram& d);
void to_json(json& j, const T1Report& r);
void to_json(json& j, const FiberingReport& r);
void to_json(json& j, const FiltrationReport& r);
void to_json(json& j, const Residual& r);
void to_json(json& j, const ProbeReport& r);
void to_json(json& j, const TableCell& c);
void to_json(json& j, const LandscapeTable& t);
void to_json(json& j, const ConditionReport& r);
/// Summary without the grid values and history.
void to_json(json& j, const DiscreteSolution& s);

/// Report envelope shared by every command.
json envelope(const std::string& command, const ProblemParams& params, json result);

}  // namespace kirchhoff
