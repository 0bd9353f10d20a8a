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

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <initializer_list>
#include <vector>

#include "netgame/common.hpp"
#include "netgame/network.hpp"
#include "netgame/rational.hpp"

namespace netgame {

// One action index per node.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::size_t n, ActionId fill = 0) : actions_(n, fill) {}
  explicit StrategyProfile(std::vector<ActionId> actions) : actions_(std::move(actions)) {}
  StrategyProfile(std::initializer_list<ActionId> actions) : actions_(actions) {}

  std::size_t size() const { return actions_.size(); }
  ActionId operator[](NodeId v) const { return actions_[v]; }
  ActionId& operator[](NodeId v) { return actions_[v]; }
  const std::vector<ActionId>& actions() const { return actions_; }

  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<ActionId> actions_;
};

enum class GameKind { pgg, minority, coloring, custom };

// A graphical game (A, u, N). Utilities see only the node's own action and
// its neighbours' actions (adjacency order), so locality holds by shape.
class GraphicalGame {
 public:
  using UtilityFn = std::function<Rational(NodeId v, ActionId own, std::span<const ActionId> neighbor_actions)>;

  GraphicalGame(std::string name, Network network, std::vector<std::vector<std::string>> action_labels,
                UtilityFn utility);

  const std::string& name() const { return name_; }
  GameKind kind() const { return kind_; }
  const Network& network() const { return *network_; }
  std::size_t node_count() const { return network_->node_count(); }
  std::size_t action_count(NodeId v) const { return labels_[v].size(); }
  const std::vector<std::string>& action_labels(NodeId v) const { return labels_[v]; }

  // PGG cost c; only meaningful for GameKind::pgg.
  const Rational& cost() const { return cost_; }
  // Number of colors; only meaningful for GameKind::coloring.
  int colors() const { return colors_; }

  // Utility of v playing `own` given its neighbours' actions in adjacency order.
  Rational utility_local(NodeId v, ActionId own, std::span<const ActionId> neighbor_actions) const;

  // Utility of v playing `own` against the neighbour entries of `profile`.
  Rational utility_if(NodeId v, ActionId own, const StrategyProfile& profile) const;

  // Throws std::invalid_argument unless the profile fits the action spaces.
  void validate(const StrategyProfile& profile) const;

 private:
  friend GraphicalGame pgg_game(const Network&, const Rational&);
  friend GraphicalGame minority_game(const Network&);
  friend GraphicalGame coloring_game(const Network&, int);

  std::string name_;
  GameKind kind_ = GameKind::custom;
  std::shared_ptr<const Network> network_;
  std::vector<std::vector<std::string>> labels_;
  UtilityFn utility_;
  Rational cost_;
  int colors_ = 0;
};

// Best-shot public goods game. Actions (F, P).
GraphicalGame pgg_game(const Network& n, const Rational& c);
inline constexpr ActionId kFree = 0;
inline constexpr ActionId kProduce = 1;

// Minority game. Actions (-1, +1): index 0 is -1.
GraphicalGame minority_game(const Network& n);

// k-coloring game. Action i is color i+1.
GraphicalGame coloring_game(const Network& n, int k);

Rational utility(const GraphicalGame& g, NodeId v, const StrategyProfile& a);
Rational welfare(const GraphicalGame& g, const StrategyProfile& a);

// All maximisers for v in tie-break (action index) order.
std::vector<ActionId> best_responses(const GraphicalGame& g, NodeId v, const StrategyProfile& a);

// Edges whose endpoints play different actions (the cut, for the minority game).
std::size_t cut_edges(const Network& n, const StrategyProfile& a);

// True when the nodes playing P in a PGG profile form an independent set / a maximal one.
bool producers_independent(const Network& n, const StrategyProfile& a);
bool producers_dominating(const Network& n, const StrategyProfile& a);

}  // namespace netgame
