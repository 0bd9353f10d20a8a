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

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "netgame/network.hpp"

namespace netgame {

struct GraphMeta {
  std::string generator;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

struct GraphDocument {
  Network network;
  GraphMeta meta;
};

// {"n", "edges" (u<v, sorted), "max_degree", "meta": {"generator","seed","params"}}
nlohmann::json graph_to_json(const Network& n, const GraphMeta& meta);

// Rejects edges with u >= v, unsorted or duplicate edges, and a max_degree
// that disagrees with the edge list.
GraphDocument graph_from_json(const nlohmann::json& j);

GraphDocument read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Network& n, const GraphMeta& meta);

}  // namespace netgame
