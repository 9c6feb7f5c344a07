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

#ifndef SLIDECAM_ORACLE_HPP_
#define SLIDECAM_ORACLE_HPP_

#include <span>
#include <vector>

#include "slidecam/critical.hpp"
#include "slidecam/geometry.hpp"
#include "slidecam/graph.hpp"

namespace slidecam {

// Exhaustive optima used as ground truth for the approximation bounds. They
// share only the geometric predicates with the pipeline, never its search.
//
// Polygon oracles draw cameras from the pruned grid, or from the left edge
// when the polygon is a rectangle; guarded variants may also place a second
// camera on the track of a chosen one.

inline constexpr std::size_t kDefaultSegmentCap = 22;
inline constexpr std::size_t kDefaultGraphCap = 18;

struct OracleResult {
  int value = 0;
  std::vector<OrthoSegment> witness;  // sorted; repeats mark doubled tracks
};

// Minimum number of cameras covering the polygon.
OracleResult OptMsc(const OrthoPolygon& polygon,
                    std::size_t cap = kDefaultSegmentCap);

// Minimum size of a guarded camera set covering the polygon.
OracleResult OptMgsc(const OrthoPolygon& polygon,
                     std::size_t cap = kDefaultSegmentCap);

// Minimum number of cameras whose joint visibility contains every region.
OracleResult OptCritical(const OrthoPolygon& polygon,
                         std::span<const CriticalRegion> regions,
                         std::size_t cap = kDefaultSegmentCap);

struct GraphOracleResult {
  int value = 0;
  std::vector<int> witness;
};

// Minimum guarded grid cover by subset enumeration in (size, lexicographic)
// order.
GraphOracleResult OptMmgg(const Graph& graph, std::size_t cap = kDefaultGraphCap);

// Candidate cameras the polygon oracles search over.
std::vector<OrthoSegment> OracleCandidates(const OrthoPolygon& polygon);

}  // namespace slidecam

#endif  // SLIDECAM_ORACLE_HPP_
