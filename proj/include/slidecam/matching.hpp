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

#ifndef SLIDECAM_MATCHING_HPP_
#define SLIDECAM_MATCHING_HPP_

#include <vector>

#include "slidecam/graph.hpp"

namespace slidecam {

// Maximum-cardinality matching of the simple graph underlying `graph`
// (self-loops ignored, parallel edges collapsed). Returns sorted indices into
// graph.edges(), choosing the lowest-index edge for every matched pair.
std::vector<int> MaxMatching(const Graph& graph);

// Minimum edge cover where a self-loop covers its single node: a maximum
// matching, plus the lowest-index incident edge for every unmatched node, or
// its lowest-index self-loop when the node is isolated. Sorted edge indices.
// Throws kUncoverableVertex for an isolated node without a self-loop.
std::vector<int> MinEdgeCover(const Graph& graph);

}  // namespace slidecam

#endif  // SLIDECAM_MATCHING_HPP_
