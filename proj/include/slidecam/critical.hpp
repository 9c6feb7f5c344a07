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

#ifndef SLIDECAM_CRITICAL_HPP_
#define SLIDECAM_CRITICAL_HPP_

#include <span>
#include <vector>

#include "slidecam/geometry.hpp"
#include "slidecam/graph.hpp"
#include "slidecam/grid.hpp"
#include "slidecam/region.hpp"

namespace slidecam {

// A connected component of the part of the polygon left unseen by the grid
// solution.
struct CriticalRegion {
  RectilinearRegion region;

  friend bool operator==(const CriticalRegion&, const CriticalRegion&) = default;
};

// One node per critical region. Edge {r, r'} means witnesses[e] guards both
// regions entirely; a self-loop is added exactly on nodes that would otherwise
// be isolated, witnessed by a segment guarding that region alone.
struct CriticalGraph {
  Graph graph;
  std::vector<OrthoSegment> witnesses;  // parallel to graph.edges()
};

// Closure of the polygon minus everything the cameras see.
RectilinearRegion UncoveredRegion(const OrthoPolygon& polygon,
                                  std::span<const OrthoSegment> cameras);

// A connected region bounded by one horizontal edge, one vertical edge meeting
// it at a corner, and an orthogonal chain monotone in x and y between their far
// endpoints. Rectangles qualify.
bool IsStaircase(const RectilinearRegion& region);

// Components of UncoveredRegion. Throws kNonStaircaseResidue if one of them is
// not a staircase, which the analysis of the grid solution rules out.
std::vector<CriticalRegion> CriticalRegions(const OrthoPolygon& polygon,
                                            std::span<const OrthoSegment> guards);

// The segments considered for guarding critical regions: the pruned grid.
// Any segment inside the polygon can be slid onto a chord through a reflex
// vertex without losing visibility, and every such chord is dominated by a
// grid segment, so nothing is lost by the restriction.
std::vector<OrthoSegment> CandidateGuards(const OrthoPolygon& polygon,
                                          const Grid& grid);

// guarded[c] lists (ascending) the regions candidate c guards entirely.
std::vector<std::vector<int>> EntireGuardTable(
    const OrthoPolygon& polygon, std::span<const CriticalRegion> regions,
    std::span<const OrthoSegment> candidates);

// Throws kUnguardableRegion when some region has no candidate guarding it
// entirely. Witnesses are the lowest-index qualifying candidates.
CriticalGraph BuildCriticalGraph(const OrthoPolygon& polygon,
                                 std::span<const CriticalRegion> regions,
                                 std::span<const OrthoSegment> candidates);

std::vector<int> MaxMatching(const CriticalGraph& graph);
std::vector<int> MinEdgeCover(const CriticalGraph& graph);

// Witness segment of every cover edge, first occurrence order, no duplicates.
std::vector<OrthoSegment> GuardsFromCover(const CriticalGraph& graph,
                                          std::span<const int> cover);

}  // namespace slidecam

#endif  // SLIDECAM_CRITICAL_HPP_
