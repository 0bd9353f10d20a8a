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
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "netgame/game.hpp"
#include "netgame/graph_io.hpp"

namespace netgame {

using nlohmann::json;

struct GraphSpec {
  std::optional<std::string> file;  // either a graph file ...
  std::string generator;            // ... or a generator with params
  json params = json::object();
  std::uint64_t seed = 0;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct GameSpec {
  std::string game;  // pgg | minority | coloring
  std::optional<Rational> c;
  std::optional<int> k;
  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

struct DynamicsSpec {
  std::string policy = "random";  // random | identity
  std::string init = "random";    // random | zeros
  std::optional<std::size_t> max_rounds;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  friend bool operator==(const DynamicsSpec&, const DynamicsSpec&) = default;
};

struct OutputSpec {
  std::optional<std::string> trajectory;
  std::optional<std::string> profile;
  std::optional<std::string> report;
  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct ExperimentConfig {
  GraphSpec graph;
  GameSpec game;
  DynamicsSpec dynamics;
  OutputSpec outputs;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Schema errors name the offending location as a JSON pointer.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& pointer, const std::string& what)
      : std::invalid_argument(pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

ExperimentConfig config_from_json(const json& j);
json config_to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::string& path);

GameSpec game_spec_from_json(const json& j, const std::string& pointer = "");
json game_spec_to_json(const GameSpec& g);
GraphicalGame make_game(const GameSpec& spec, const Network& n);

// Builds a network by name. Params: n, d, k, a, b, leaves as the generator
// needs; optional "girth" (int or "auto") and "double_cover" (bool).
GraphDocument generate_graph(const std::string& generator, const json& params, std::uint64_t seed);
GraphDocument build_graph(const GraphSpec& spec);

}  // namespace netgame
