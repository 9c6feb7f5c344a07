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

#ifndef SLIDECAM_GRAPH_HPP_
#define SLIDECAM_GRAPH_HPP_

#include <utility>
#include <vector>

namespace slidecam {

// Small undirected multigraph over nodes 0..n-1. Self-loops are stored in the
// edge list but never appear in neighbor lists.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  explicit Graph(int node_count);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted, without duplicates or self-loops.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool isolated(int v) const { return adjacency_[v].empty(); }
  bool Adjacent(int u, int v) const;

  // Returns the index of the new edge.
  int AddEdge(int u, int v);

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

}  // namespace slidecam

#endif  // SLIDECAM_GRAPH_HPP_
