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

#include "netgame/game.hpp"

#include <algorithm>

namespace netgame {

GraphicalGame::GraphicalGame(std::string name, Network network,
                             std::vector<std::vector<std::string>> action_labels, UtilityFn utility)
    : name_(std::move(name)),
      network_(std::make_shared<const Network>(std::move(network))),
      labels_(std::move(action_labels)),
      utility_(std::move(utility)) {
  require(labels_.size() == network_->node_count(), "action lists must cover every node");
  for (const auto& l : labels_) require(!l.empty(), "every node needs at least one action");
}

Rational GraphicalGame::utility_local(NodeId v, ActionId own, std::span<const ActionId> nb) const {
  switch (kind_) {
    case GameKind::pgg:
      if (own == kProduce) return Rational(1) - cost_;
      return std::find(nb.begin(), nb.end(), kProduce) != nb.end() ? Rational(1) : Rational(0);
    case GameKind::minority: {
      auto differ = std::count_if(nb.begin(), nb.end(), [own](ActionId a) { return a != own; });
      return Rational(1 + differ - (static_cast<std::int64_t>(nb.size()) - differ));
    }
    case GameKind::coloring:
      return std::find(nb.begin(), nb.end(), own) != nb.end() ? Rational(0) : Rational(1);
    case GameKind::custom:
      break;
  }
  return utility_(v, own, nb);
}

Rational GraphicalGame::utility_if(NodeId v, ActionId own, const StrategyProfile& profile) const {
  auto nb = network_->neighbors(v);
  ActionId buffer[16];
  if (nb.size() <= 16) {
    for (std::size_t i = 0; i < nb.size(); ++i) buffer[i] = profile[nb[i]];
    return utility_local(v, own, std::span<const ActionId>(buffer, nb.size()));
  }
  std::vector<ActionId> gathered;
  gathered.reserve(nb.size());
  for (NodeId u : nb) gathered.push_back(profile[u]);
  return utility_local(v, own, gathered);
}

void GraphicalGame::validate(const StrategyProfile& profile) const {
  require(profile.size() == node_count(), "profile has " + std::to_string(profile.size()) +
                                              " entries for " + std::to_string(node_count()) + " nodes");
  for (std::size_t v = 0; v < profile.size(); ++v) {
    ActionId a = profile[static_cast<NodeId>(v)];
    require(a >= 0 && static_cast<std::size_t>(a) < labels_[v].size(),
            "invalid action " + std::to_string(a) + " at node " + std::to_string(v));
  }
}

GraphicalGame pgg_game(const Network& n, const Rational& c) {
  require(c > Rational(0) && c < Rational(1), "PGG cost must satisfy 0 < c < 1 (got " + c.str() + ")");
  const Rational keep = Rational(1) - c;
  GraphicalGame g("pgg", n, std::vector<std::vector<std::string>>(n.node_count(), {"F", "P"}),
                  [keep](NodeId, ActionId own, std::span<const ActionId> nb) {
                    if (own == kProduce) return keep;
                    return std::find(nb.begin(), nb.end(), kProduce) != nb.end() ? Rational(1) : Rational(0);
                  });
  g.kind_ = GameKind::pgg;
  g.cost_ = c;
  return g;
}

GraphicalGame minority_game(const Network& n) {
  GraphicalGame g("minority", n, std::vector<std::vector<std::string>>(n.node_count(), {"-1", "+1"}),
                  [](NodeId, ActionId own, std::span<const ActionId> nb) {
                    auto differ = std::count_if(nb.begin(), nb.end(), [own](ActionId a) { return a != own; });
                    return Rational(1 + differ - (static_cast<std::int64_t>(nb.size()) - differ));
                  });
  g.kind_ = GameKind::minority;
  return g;
}

GraphicalGame coloring_game(const Network& n, int k) {
  require(k >= 2, "coloring game requires k >= 2 (got " + std::to_string(k) + ")");
  std::vector<std::string> colors;
  for (int i = 1; i <= k; ++i) colors.push_back(std::to_string(i));
  GraphicalGame g("coloring", n, std::vector<std::vector<std::string>>(n.node_count(), colors),
                  [](NodeId, ActionId own, std::span<const ActionId> nb) {
                    return std::find(nb.begin(), nb.end(), own) != nb.end() ? Rational(0) : Rational(1);
                  });
  g.kind_ = GameKind::coloring;
  g.colors_ = k;
  return g;
}

Rational utility(const GraphicalGame& g, NodeId v, const StrategyProfile& a) {
  require(a.size() == g.node_count(), "profile shape does not match the game");
  return g.utility_if(v, a[v], a);
}

Rational welfare(const GraphicalGame& g, const StrategyProfile& a) {
  g.validate(a);
  Rational total;
  for (std::size_t v = 0; v < g.node_count(); ++v) total += g.utility_if(static_cast<NodeId>(v), a[static_cast<NodeId>(v)], a);
  return total;
}

std::vector<ActionId> best_responses(const GraphicalGame& g, NodeId v, const StrategyProfile& a) {
  std::vector<ActionId> out;
  Rational best;
  const auto count = static_cast<ActionId>(g.action_count(v));
  for (ActionId x = 0; x < count; ++x) {
    Rational u = g.utility_if(v, x, a);
    if (out.empty() || u > best) {
      best = u;
      out.assign(1, x);
    } else if (u == best) {
      out.push_back(x);
    }
  }
  return out;
}

std::size_t cut_edges(const Network& n, const StrategyProfile& a) {
  std::size_t cut = 0;
  for (auto [u, v] : n.edges()) cut += a[u] != a[v];
  return cut;
}

bool producers_independent(const Network& n, const StrategyProfile& a) {
  for (auto [u, v] : n.edges())
    if (a[u] == kProduce && a[v] == kProduce) return false;
  return true;
}

bool producers_dominating(const Network& n, const StrategyProfile& a) {
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    if (a[static_cast<NodeId>(v)] == kProduce) continue;
    auto nb = n.neighbors(static_cast<NodeId>(v));
    if (std::none_of(nb.begin(), nb.end(), [&](NodeId u) { return a[u] == kProduce; })) return false;
  }
  return true;
}

}  // namespace netgame
