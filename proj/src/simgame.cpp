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

#include "netgame/simgame.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace netgame {

namespace {

Color checked_pow(Color base, int exp) {
  Color out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<Color>::max() / base)
      throw std::invalid_argument("normal-form palette exceeds 64 bits");
    out *= base;
  }
  return out;
}

int residue(Color c, int classes) { return static_cast<int>((c - 1) % static_cast<Color>(classes)); }

}  // namespace

NormalFormAlgorithm greedy_mis_normal_form(std::size_t max_degree) {
  require(max_degree >= 2, "greedy MIS normal form requires Delta >= 2");
  NormalFormAlgorithm f;
  f.max_degree = max_degree;
  const int classes = static_cast<int>(max_degree * max_degree + 1);
  f.t = classes;
  f.residue_classes = classes;
  f.palette = checked_pow(max_degree, 2 * f.t + 2) + 1;
  f.decide = [classes](const Network& n, std::span<const NodeId> nodes, std::span<const Color> colors) {
    std::unordered_map<NodeId, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
    std::vector<int> joined(nodes.size(), -1);
    // A node joins in phase rho(w) unless a neighbour of a smaller phase
    // joined. Recursion descends strictly in phase, so it stays within
    // classes-1 hops of the center.
    auto joins = [&](auto&& self, std::size_t i) -> bool {
      if (joined[i] >= 0) return joined[i] == 1;
      const int phase = residue(colors[i], classes);
      bool ok = true;
      for (NodeId x : n.neighbors(nodes[i])) {
        auto it = index.find(x);
        if (it == index.end()) throw InternalFault("greedy MIS decision left its ball");
        if (residue(colors[it->second], classes) < phase && self(self, it->second)) {
          ok = false;
          break;
        }
      }
      joined[i] = ok ? 1 : 0;
      return ok;
    };
    return joins(joins, 0) ? kProduce : kFree;
  };
  return f;
}

SimulationGame::SimulationGame(GraphicalGame base, NormalFormAlgorithm algorithm)
    : base_(std::move(base)), algorithm_(std::move(algorithm)) {
  const Network& net = base_.network();
  const std::size_t n = net.node_count();
  const int t = algorithm_.t;
  // Everything per node is read off its (4t+2)-hop view.
  std::vector<Edge> prime_edges;
  t_balls_.resize(n);
  ball_index_.resize(n);
  check_balls_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto view = ball(net, static_cast<NodeId>(v), 4 * t + 2);
    for (auto [w, d] : view) {
      if (d >= 1 && static_cast<NodeId>(v) < w) prime_edges.emplace_back(static_cast<NodeId>(v), w);
      if (d <= t) t_balls_[v].push_back(w);
      if (d <= 2 * t + 2) check_balls_[v].emplace_back(w, d);
    }
    for (std::size_t i = 0; i < t_balls_[v].size(); ++i) ball_index_[v].emplace_back(t_balls_[v][i], i);
    std::sort(ball_index_[v].begin(), ball_index_[v].end());
  }
  n_prime_ = Network(n, prime_edges);
}

std::optional<std::size_t> SimulationGame::index_in_ball(NodeId owner, NodeId x) const {
  const auto& idx = ball_index_[owner];
  auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(x, std::size_t{0}));
  if (it == idx.end() || it->first != x) return std::nullopt;
  return it->second;
}

std::optional<Color> SimulationGame::known_color(NodeId x, const SimProfile& profile, NodeId skip) const {
  // Owners of x are exactly the nodes of x's t-ball.
  for (NodeId owner : t_balls_[x]) {
    if (owner == skip || !profile[owner]) continue;
    return profile[owner]->colors[*index_in_ball(owner, x)];
  }
  return std::nullopt;
}

int SimulationGame::utility(NodeId v, const SimProfile& profile) const {
  require(profile.size() == network().node_count(), "simulation profile shape mismatch");
  if (!profile[v]) return 0;
  const SimAction& act = *profile[v];
  const auto& ballv = t_balls_[v];
  if (act.colors.size() != ballv.size()) return 0;

  // Membership in A'_v: distinct in-palette colors and output = F(colors).
  std::vector<Color> sorted = act.colors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  if (sorted.front() < 1 || sorted.back() > algorithm_.palette) return 0;
  if (algorithm_.decide(network(), ballv, act.colors) != act.output) return 0;

  const int classes = algorithm_.residue_classes;
  for (std::size_t i = 0; i < ballv.size(); ++i) {
    const NodeId w = ballv[i];
    const Color c = act.colors[i];
    // Compatibility with every non-empty owner of w.
    for (NodeId owner : t_balls_[w]) {
      if (owner == v || !profile[owner]) continue;
      if (profile[owner]->colors[*index_in_ball(owner, w)] != c) return 0;
    }
    // Properness against every color claimed for nodes within 2t+2 of w.
    for (auto [x, d] : check_balls_[w]) {
      if (d == 0) continue;
      for (NodeId owner : t_balls_[x]) {
        if (owner != v && !profile[owner]) continue;
        Color other = profile[owner]->colors[*index_in_ball(owner, x)];
        if (other == c) return 0;
        if (classes > 0 && d <= 2 && residue(other, classes) == residue(c, classes)) return 0;
      }
    }
  }
  return 1;
}

SimAction SimulationGame::construct_best_response(NodeId v, const SimProfile& profile) const {
  const auto& ballv = t_balls_[v];
  const int classes = algorithm_.residue_classes;
  SimAction act;
  act.colors.assign(ballv.size(), 0);
  std::unordered_map<NodeId, Color> own;

  auto lookup = [&](NodeId x) -> std::optional<Color> {
    if (auto it = own.find(x); it != own.end()) return it->second;
    return known_color(x, profile, v);
  };

  for (std::size_t i = 0; i < ballv.size(); ++i) {
    const NodeId w = ballv[i];
    Color chosen = 0;
    if (auto forced = known_color(w, profile, v)) {
      chosen = *forced;
    } else {
      std::vector<Color> blocked;
      std::vector<int> blocked_residues;
      for (auto [x, d] : check_balls_[w]) {
        if (d == 0) continue;
        if (auto other = lookup(x)) {
          blocked.push_back(*other);
          if (classes > 0 && d <= 2) blocked_residues.push_back(residue(*other, classes));
        }
      }
      std::sort(blocked.begin(), blocked.end());
      for (Color c = 1; c <= algorithm_.palette; ++c) {
        if (std::binary_search(blocked.begin(), blocked.end(), c)) continue;
        if (classes > 0 && std::find(blocked_residues.begin(), blocked_residues.end(), residue(c, classes)) !=
                               blocked_residues.end())
          continue;
        chosen = c;
        break;
      }
      if (chosen == 0) throw InternalFault("no free color for node " + std::to_string(w));
    }
    own.emplace(w, chosen);
    act.colors[i] = chosen;
  }
  act.output = algorithm_.decide(network(), ballv, act.colors);
  return act;
}

SimulationGame build_simulation_game(const GraphicalGame& base, const NormalFormAlgorithm& algorithm) {
  require(base.network().max_degree() <= algorithm.max_degree,
          "base network max degree " + std::to_string(base.network().max_degree()) +
              " exceeds the normal-form algorithm's Delta " + std::to_string(algorithm.max_degree));
  require(static_cast<bool>(algorithm.decide) && algorithm.t >= 1, "normal-form algorithm is incomplete");
  return SimulationGame(base, algorithm);
}

SimProfile play_simulation_round(const SimulationGame& game, const Order& order, std::uint64_t) {
  const std::size_t n = game.network().node_count();
  require(is_permutation_of_nodes(order, n), "simulation round order is not a permutation");
  SimProfile profile(n);
  for (NodeId v : order) {
    profile[v] = game.construct_best_response(v, profile);
    if (game.utility(v, profile) != 1)
      throw InternalFault("constructed simulation action at node " + std::to_string(v) + " has utility 0");
  }
  return profile;
}

bool all_utilities_one(const SimulationGame& game, const SimProfile& profile) {
  for (std::size_t v = 0; v < profile.size(); ++v)
    if (game.utility(static_cast<NodeId>(v), profile) != 1) return false;
  return true;
}

std::size_t switches_in_next_round(const SimulationGame& game, const SimProfile& start) {
  SimProfile profile = start;
  std::size_t switches = 0;
  for (std::size_t v = 0; v < profile.size(); ++v) {
    const auto node = static_cast<NodeId>(v);
    if (game.utility(node, profile) == 1) continue;
    profile[v] = game.construct_best_response(node, profile);
    ++switches;
  }
  return switches;
}

StrategyProfile project(const SimulationGame& game, const SimProfile& profile) {
  require(profile.size() == game.network().node_count(), "simulation profile shape mismatch");
  StrategyProfile out(profile.size());
  for (std::size_t v = 0; v < profile.size(); ++v) {
    require(profile[v].has_value(), "cannot project an Empty action at node " + std::to_string(v));
    out[static_cast<NodeId>(v)] = profile[v]->output;
  }
  return out;
}

std::optional<std::vector<Color>> merged_coloring(const SimulationGame& game, const SimProfile& profile) {
  const std::size_t n = game.network().node_count();
  std::vector<Color> colors(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!profile[v]) continue;
    auto ballv = game.t_ball(static_cast<NodeId>(v));
    for (std::size_t i = 0; i < ballv.size(); ++i) {
      Color& slot = colors[ballv[i]];
      if (slot != 0 && slot != profile[v]->colors[i]) return std::nullopt;
      slot = profile[v]->colors[i];
    }
  }
  if (std::find(colors.begin(), colors.end(), Color{0}) != colors.end()) return std::nullopt;
  return colors;
}

}  // namespace netgame
