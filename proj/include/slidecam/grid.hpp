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

#ifndef SLIDECAM_GRID_HPP_
#define SLIDECAM_GRID_HPP_

#include <span>
#include <vector>

#include "slidecam/geometry.hpp"
#include "slidecam/graph.hpp"

namespace slidecam {

// Grid segments kept after domination pruning. origins[i] lists the reflex
// vertices whose maximal chords coincide with segments[i]; it is empty for
// synthetic grids.
struct Grid {
  std::vector<OrthoSegment> segments;
  std::vector<std::vector<Point>> origins;

  std::size_t size() const { return segments.size(); }
  bool empty() const { return segments.empty(); }
};

// Maximal horizontal and vertical chords through every reflex vertex, sorted
// and without duplicates.
std::vector<OrthoSegment> BuildChordSet(const OrthoPolygon& polygon);

// Removes every chord dominated by another chord of the same orientation, and
// merges chords of either orientation whose visibility regions are equal.
// Within a group of equal regions the smallest chord in (orientation, anchor,
// lo, hi) order survives, so the output does not depend on the input order.
//
// A horizontal chord strictly dominated only by vertical ones (or the reverse)
// stays: dropping it can disconnect the grid and lets the optimal grid
// solution leave non-staircase residue.
Grid PruneDominated(const OrthoPolygon& polygon,
                    std::span<const OrthoSegment> chords);

// BuildChordSet followed by PruneDominated.
Grid BuildGrid(const OrthoPolygon& polygon);

// Grid from arbitrary segments, for tests and experiments.
Grid SyntheticGrid(std::vector<OrthoSegment> segments);

// One node per grid segment; an edge for each pair sharing a point.
Graph IntersectionGraph(const Grid& grid);

// Both endpoints of every segment lie on the polygon boundary.
bool IsSimpleGrid(const Grid& grid, const OrthoPolygon& polygon);

// The intersection graph is connected. Empty and single-segment grids count
// as connected.
bool IsConnected(const Grid& grid);

}  // namespace slidecam

#endif  // SLIDECAM_GRID_HPP_
