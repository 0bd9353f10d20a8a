// Copyright 2026 The netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "netgame/dynamics.hpp"
#include "netgame/local_sim.hpp"
#include "netgame/lvl.hpp"
#include "netgame/oracle.hpp"

namespace netgame {

using nlohmann::json;

json verdict_to_json(const Verdict& v);

json coloring_to_json(const DistanceColoring& c);
DistanceColoring coloring_from_json(const json& j);

json profile_to_json(const StrategyProfile& a);
StrategyProfile profile_from_json(const json& j);

// round,welfare_num,welfare_den,switches[,cut_edges]; meta goes on a leading
// "# meta " comment line unless it is null.
std::string trajectory_csv(const Trace& t, const json& meta = nullptr);

// Equilibria are listed in full up to max_listed, otherwise replaced by a count.
json ne_report_to_json(const NeReport& r, std::size_t max_listed);
json inefficiency_to_json(const InefficiencyReport& r);

// {"tool", "command", "config", "timestamp"}; the timestamp is dropped when
// deterministic is set.
json make_meta(const std::string& command, const json& config, bool deterministic);

}  // namespace netgame
