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

#include "netgame/lvl.hpp"

namespace netgame {

LvlSpec compile_lvl(const GraphicalGame& g) {
  LvlSpec spec;
  for (std::size_t v = 0; v < g.node_count(); ++v) spec.alphabet.push_back(g.action_labels(static_cast<NodeId>(v)));
  spec.accept = [g](NodeId center, ActionId label, std::span<const ActionId> nb) {
    const Rational own = g.utility_local(center, label, nb);
    const auto count = static_cast<ActionId>(g.action_count(center));
    for (ActionId x = 0; x < count; ++x)
      if (x != label && g.utility_local(center, x, nb) > own) return false;
    return true;
  };
  return spec;
}

namespace {

bool check_node(const LvlSpec& spec, const Network& n, const StrategyProfile& labels, NodeId v) {
  auto nb = n.neighbors(v);
  std::vector<ActionId> star;
  star.reserve(nb.size());
  for (NodeId u : nb) star.push_back(labels[u]);
  return spec.accept(v, labels[v], star);
}

}  // namespace

Verdict verify(const LvlSpec& spec, const Network& n, const StrategyProfile& labels, Exec exec) {
  const auto count = static_cast<std::int64_t>(n.node_count());
  require(labels.size() == n.node_count() && spec.alphabet.size() == n.node_count(),
          "label vector does not match the network");
  for (std::int64_t v = 0; v < count; ++v) {
    ActionId a = labels[static_cast<NodeId>(v)];
    require(a >= 0 && static_cast<std::size_t>(a) < spec.alphabet[v].size(),
            "label outside the alphabet at node " + std::to_string(v));
  }
  std::vector<char> ok(n.node_count(), 1);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < count; ++v) ok[v] = check_node(spec, n, labels, static_cast<NodeId>(v));
  } else {
    for (std::int64_t v = 0; v < count; ++v) ok[v] = check_node(spec, n, labels, static_cast<NodeId>(v));
  }
  Verdict verdict;
  for (std::int64_t v = 0; v < count; ++v)
    if (!ok[v]) verdict.violations.push_back(static_cast<NodeId>(v));
  verdict.accepted = verdict.violations.empty();
  return verdict;
}

}  // namespace netgame
