// Copyright 2026 The slidecam Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slidecam/matching.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "slidecam/error.hpp"

namespace slidecam {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
using BoostVertex = boost::graph_traits<BoostGraph>::vertex_descriptor;

// Lowest edge index for each unordered non-loop pair.
std::map<std::pair<int, int>, int> FirstEdgeByPair(const Graph& graph) {
  std::map<std::pair<int, int>, int> first;
  const auto& edges = graph.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    auto [u, v] = edges[i];
    if (u == v) continue;
    first.try_emplace({std::min(u, v), std::max(u, v)}, i);
  }
  return first;
}

}  // namespace

std::vector<int> MaxMatching(const Graph& graph) {
  const int n = graph.node_count();
  const auto first = FirstEdgeByPair(graph);
  BoostGraph g(static_cast<std::size_t>(n));
  for (const auto& [pair, index] : first) {
    boost::add_edge(static_cast<BoostVertex>(pair.first),
                    static_cast<BoostVertex>(pair.second), g);
  }
  std::vector<BoostVertex> mate(static_cast<std::size_t>(n));
  boost::edmonds_maximum_cardinality_matching(g, mate.data());

  std::vector<int> matched;
  const BoostVertex none = boost::graph_traits<BoostGraph>::null_vertex();
  for (int v = 0; v < n; ++v) {
    const BoostVertex m = mate[static_cast<std::size_t>(v)];
    if (m != none && static_cast<int>(m) > v) {
      matched.push_back(first.at({v, static_cast<int>(m)}));
    }
  }
  std::sort(matched.begin(), matched.end());
  return matched;
}

std::vector<int> MinEdgeCover(const Graph& graph) {
  std::vector<int> cover = MaxMatching(graph);
  const auto& edges = graph.edges();
  std::vector<char> covered(static_cast<std::size_t>(graph.node_count()), 0);
  for (int e : cover) {
    covered[edges[e].first] = 1;
    covered[edges[e].second] = 1;
  }
  for (int v = 0; v < graph.node_count(); ++v) {
    if (covered[v]) continue;
    const bool loop_only = graph.isolated(v);
    int pick = -1;
    for (int i = 0; i < static_cast<int>(edges.size()) && pick < 0; ++i) {
      auto [a, b] = edges[i];
      if (a != v && b != v) continue;
      if ((a == b) == loop_only) pick = i;
    }
    if (pick < 0) {
      throw Error(ErrorCode::kUncoverableVertex, "node " + std::to_string(v));
    }
    cover.push_back(pick);
    covered[edges[pick].first] = 1;
    covered[edges[pick].second] = 1;
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return cover;
}

}  // namespace slidecam
