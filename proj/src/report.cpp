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

#include "netgame/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace netgame {

json verdict_to_json(const Verdict& v) { return {{"accepted", v.accepted}, {"violations", v.violations}}; }

json coloring_to_json(const DistanceColoring& c) {
  return {{"radius", c.radius}, {"palette", c.palette_size}, {"colors", c.colors}};
}

DistanceColoring coloring_from_json(const json& j) {
  require(j.is_object() && j.contains("radius") && j.contains("palette") && j.contains("colors"),
          "coloring JSON needs radius, palette and colors");
  DistanceColoring c;
  c.radius = j.at("radius").get<int>();
  c.palette_size = j.at("palette").get<int>();
  c.colors = j.at("colors").get<std::vector<int>>();
  for (int x : c.colors) require(x >= 1 && x <= c.palette_size, "coloring JSON has a color outside 1..palette");
  return c;
}

json profile_to_json(const StrategyProfile& a) { return {{"profile", a.actions()}}; }

StrategyProfile profile_from_json(const json& j) {
  require(j.is_object() && j.contains("profile") && j.at("profile").is_array(),
          "profile JSON needs a \"profile\" array");
  return StrategyProfile(j.at("profile").get<std::vector<ActionId>>());
}

std::string trajectory_csv(const Trace& t, const json& meta) {
  std::ostringstream os;
  if (!meta.is_null()) os << "# meta " << meta.dump() << "\n";
  const bool cuts = !t.cut_edges.empty();
  os << "round,welfare_num,welfare_den,switches" << (cuts ? ",cut_edges" : "") << "\n";
  for (std::size_t r = 0; r < t.welfare.size(); ++r) {
    os << r << "," << t.welfare[r].num() << "," << t.welfare[r].den() << "," << (r == 0 ? 0 : t.switches[r - 1]);
    if (cuts) os << "," << t.cut_edges[r];
    os << "\n";
  }
  return os.str();
}

json ne_report_to_json(const NeReport& r, std::size_t max_listed) {
  json j;
  j["equilibrium_count"] = r.equilibria.size();
  if (r.equilibria.size() <= max_listed) {
    json list = json::array();
    for (const auto& a : r.equilibria) list.push_back(a.actions());
    j["equilibria"] = list;
  } else {
    j["equilibria"] = nullptr;
    j["equilibria_elided"] = true;
  }
  j["profiles_examined"] = r.profiles_examined;
  j["best_welfare"] = r.best_welfare.str();
  j["worst_ne_welfare"] = r.equilibria.empty() ? json(nullptr) : json(r.worst_ne_welfare.str());
  j["best_ne_welfare"] = r.equilibria.empty() ? json(nullptr) : json(r.best_ne_welfare.str());
  j["poa"] = r.poa ? json(r.poa->str()) : json(nullptr);
  return j;
}

json inefficiency_to_json(const InefficiencyReport& r) {
  return {{"T", r.rounds},
          {"trials", r.trials},
          {"optimum_upper_bound", r.optimum_upper_bound.str()},
          {"optimum_exact", r.optimum_exact},
          {"mean_br_welfare", r.mean_br_welfare.str()},
          {"ratio_upper_bound", r.ratio_upper_bound.str()},
          {"note", "optimum is the global welfare maximum, an upper bound on the best T-round profile"}};
}

json make_meta(const std::string& command, const json& config, bool deterministic) {
  json meta{{"tool", "netgame"}, {"command", command}, {"config", config}};
  if (!deterministic) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["timestamp"] = buf;
  }
  return meta;
}

}  // namespace netgame
