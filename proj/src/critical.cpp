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

#include "slidecam/critical.hpp"

#include <algorithm>
#include <string>

#include "slidecam/error.hpp"
#include "slidecam/matching.hpp"
#include "slidecam/visibility.hpp"

namespace slidecam {

RectilinearRegion UncoveredRegion(const OrthoPolygon& polygon,
                                  std::span<const OrthoSegment> cameras) {
  return RegionDifference(RectilinearRegion::FromPolygon(polygon),
                          JointVisibility(polygon, cameras));
}

bool IsStaircase(const RectilinearRegion& region) {
  const auto& slabs = region.slabs();
  if (slabs.empty()) return false;
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    if (slabs[i].ys.size() != 1) return false;
    if (i > 0 && slabs[i - 1].x1 != slabs[i].x0) return false;
  }
  // With one interval per slab the region is a histogram over x. It is a
  // staircase iff one side is flat and the other moves monotonically; the
  // corner sits where the flat side meets the taller end.
  auto all_pairs = [&](auto pred) {
    for (std::size_t i = 0; i + 1 < slabs.size(); ++i) {
      if (!pred(slabs[i].ys[0], slabs[i + 1].ys[0])) return false;
    }
    return true;
  };
  const bool flat_bottom =
      all_pairs([](const Interval& a, const Interval& b) { return a.lo == b.lo; });
  const bool flat_top =
      all_pairs([](const Interval& a, const Interval& b) { return a.hi == b.hi; });
  const bool top_falls =
      all_pairs([](const Interval& a, const Interval& b) { return a.hi >= b.hi; });
  const bool top_rises =
      all_pairs([](const Interval& a, const Interval& b) { return a.hi <= b.hi; });
  const bool bottom_falls =
      all_pairs([](const Interval& a, const Interval& b) { return a.lo >= b.lo; });
  const bool bottom_rises =
      all_pairs([](const Interval& a, const Interval& b) { return a.lo <= b.lo; });
  return (flat_bottom && (top_falls || top_rises)) ||
         (flat_top && (bottom_falls || bottom_rises));
}

std::vector<CriticalRegion> CriticalRegions(const OrthoPolygon& polygon,
                                            std::span<const OrthoSegment> guards) {
  std::vector<CriticalRegion> out;
  for (RectilinearRegion& part : RegionComponents(UncoveredRegion(polygon, guards))) {
    if (!IsStaircase(part)) {
      const Rect box = part.bounding_box();
      throw Error(ErrorCode::kNonStaircaseResidue,
                  "component in [" + std::to_string(box.x0) + "," +
                      std::to_string(box.x1) + "]x[" + std::to_string(box.y0) +
                      "," + std::to_string(box.y1) + "]");
    }
    out.push_back({std::move(part)});
  }
  return out;
}

std::vector<OrthoSegment> CandidateGuards(const OrthoPolygon& /*polygon*/,
                                          const Grid& grid) {
  return grid.segments;
}

std::vector<std::vector<int>> EntireGuardTable(
    const OrthoPolygon& polygon, std::span<const CriticalRegion> regions,
    std::span<const OrthoSegment> candidates) {
  std::vector<std::vector<int>> guarded(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const RectilinearRegion vis = CameraVisibility(polygon, candidates[c]);
    for (std::size_t r = 0; r < regions.size(); ++r) {
      if (RegionContains(vis, regions[r].region)) {
        guarded[c].push_back(static_cast<int>(r));
      }
    }
  }
  return guarded;
}

CriticalGraph BuildCriticalGraph(const OrthoPolygon& polygon,
                                 std::span<const CriticalRegion> regions,
                                 std::span<const OrthoSegment> candidates) {
  const int n = static_cast<int>(regions.size());
  const auto guarded = EntireGuardTable(polygon, regions, candidates);

  // guards_of[r]: candidates guarding region r, ascending.
  std::vector<std::vector<int>> guards_of(regions.size());
  for (std::size_t c = 0; c < guarded.size(); ++c) {
    for (int r : guarded[c]) guards_of[r].push_back(static_cast<int>(c));
  }
  for (int r = 0; r < n; ++r) {
    if (guards_of[r].empty()) {
      throw Error(ErrorCode::kUnguardableRegion,
                  "no candidate guards critical region " + std::to_string(r));
    }
  }

  CriticalGraph out{Graph(n), {}};
  for (int r = 0; r < n; ++r) {
    for (int q = r + 1; q < n; ++q) {
      for (int c : guards_of[r]) {
        if (std::binary_search(guards_of[q].begin(), guards_of[q].end(), c)) {
          out.graph.AddEdge(r, q);
          out.witnesses.push_back(candidates[c]);
          break;
        }
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    if (out.graph.isolated(r)) {
      out.graph.AddEdge(r, r);
      out.witnesses.push_back(candidates[guards_of[r].front()]);
    }
  }
  return out;
}

std::vector<int> MaxMatching(const CriticalGraph& graph) {
  return MaxMatching(graph.graph);
}

std::vector<int> MinEdgeCover(const CriticalGraph& graph) {
  return MinEdgeCover(graph.graph);
}

std::vector<OrthoSegment> GuardsFromCover(const CriticalGraph& graph,
                                          std::span<const int> cover) {
  std::vector<OrthoSegment> out;
  for (int e : cover) {
    const OrthoSegment& s = graph.witnesses.at(static_cast<std::size_t>(e));
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace slidecam
