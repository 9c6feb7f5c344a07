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

#include "slidecam/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace slidecam {

Graph::Graph(int node_count) : adjacency_(static_cast<std::size_t>(node_count)) {}

bool Graph::Adjacent(int u, int v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

int Graph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  edges_.emplace_back(u, v);
  if (u != v && !Adjacent(u, v)) {
    adjacency_[u].insert(
        std::lower_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
    adjacency_[v].insert(
        std::lower_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
  }
  return static_cast<int>(edges_.size()) - 1;
}

}  // namespace slidecam
