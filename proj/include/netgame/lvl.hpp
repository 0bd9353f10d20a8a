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
#include <span>
#include <string>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

// Radius-1 locally verifiable labeling. Configurations are held as a
// predicate over a labeled star rather than an enumerated set.
struct LvlSpec {
  using Accept = std::function<bool(NodeId center, ActionId center_label,
                                    std::span<const ActionId> neighbor_labels)>;

  std::vector<std::vector<std::string>> alphabet;
  int radius = 1;
  Accept accept;
};

struct Verdict {
  bool accepted = true;
  std::vector<NodeId> violations;
};

// Accepts a labeled star iff the center's label is a best response to its
// neighbours' labels.
LvlSpec compile_lvl(const GraphicalGame& g);

// Runs the predicate at every node; violations are listed in node order.
Verdict verify(const LvlSpec& spec, const Network& n, const StrategyProfile& labels,
               Exec exec = Exec::parallel);

}  // namespace netgame
