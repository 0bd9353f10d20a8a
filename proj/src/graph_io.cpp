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

#include "netgame/graph_io.hpp"

#include <fstream>
#include <stdexcept>

namespace netgame {

using nlohmann::json;

json graph_to_json(const Network& n, const GraphMeta& meta) {
  json edges = json::array();
  for (auto [u, v] : n.edges()) edges.push_back({u, v});
  return json{{"n", n.node_count()},
              {"edges", std::move(edges)},
              {"max_degree", n.max_degree()},
              {"meta", {{"generator", meta.generator}, {"seed", meta.seed}, {"params", meta.params}}}};
}

GraphDocument graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph edge must be [u, v]");
    Edge edge{e[0].get<NodeId>(), e[1].get<NodeId>()};
    if (edge.first >= edge.second)
      throw std::invalid_argument("graph edge [" + std::to_string(edge.first) + "," +
                                  std::to_string(edge.second) + "] must satisfy u < v");
    if (!edges.empty() && edge <= edges.back())
      throw std::invalid_argument("graph edges must be sorted and free of duplicates");
    edges.push_back(edge);
  }
  GraphDocument doc{Network(n, edges), {}};
  if (j.contains("max_degree") && j.at("max_degree").get<std::size_t>() != doc.network.max_degree())
    throw std::invalid_argument("graph max_degree does not match edges");
  if (j.contains("meta")) {
    const auto& m = j.at("meta");
    doc.meta.generator = m.value("generator", "");
    doc.meta.seed = m.value("seed", std::uint64_t{0});
    doc.meta.params = m.value("params", json::object());
  }
  return doc;
}

GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("graph file '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

void write_graph_file(const std::string& path, const Network& n, const GraphMeta& meta) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << graph_to_json(n, meta).dump(2) << '\n';
}

}  // namespace netgame
