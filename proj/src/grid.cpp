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

#include "slidecam/grid.hpp"

#include <algorithm>
#include <queue>

#include "slidecam/region.hpp"
#include "slidecam/visibility.hpp"

namespace slidecam {

std::vector<OrthoSegment> BuildChordSet(const OrthoPolygon& polygon) {
  std::vector<OrthoSegment> chords;
  for (const Point& u : ReflexVertices(polygon)) {
    chords.push_back(MaxChord(polygon, u, Orientation::kHorizontal));
    chords.push_back(MaxChord(polygon, u, Orientation::kVertical));
  }
  std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  return chords;
}

Grid PruneDominated(const OrthoPolygon& polygon,
                    std::span<const OrthoSegment> chords) {
  std::vector<OrthoSegment> sorted(chords.begin(), chords.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const std::size_t n = sorted.size();
  std::vector<RectilinearRegion> vis;
  vis.reserve(n);
  for (const OrthoSegment& s : sorted) vis.push_back(CameraVisibility(polygon, s));

  // dom[j][i]: chord j dominates chord i.
  std::vector<std::vector<char>> dom(n, std::vector<char>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) dom[j][i] = RegionContains(vis[j], vis[i]);
    }
  }

  const std::vector<Point> reflex = ReflexVertices(polygon);
  Grid grid;
  for (std::size_t i = 0; i < n; ++i) {
    bool removed = false;
    for (std::size_t j = 0; j < n && !removed; ++j) {
      if (j == i || !dom[j][i]) continue;
      if (sorted[j].orientation == sorted[i].orientation) {
        removed = !dom[i][j] || j < i;
      } else {
        // Across orientations only equal visibility regions are merged.
        removed = dom[i][j] && j < i;
      }
    }
    if (removed) continue;
    std::vector<Point> origin;
    for (const Point& u : reflex) {
      if (sorted[i].Contains(u) &&
          MaxChord(polygon, u, sorted[i].orientation) == sorted[i]) {
        origin.push_back(u);
      }
    }
    grid.segments.push_back(sorted[i]);
    grid.origins.push_back(std::move(origin));
  }
  return grid;
}

Grid BuildGrid(const OrthoPolygon& polygon) {
  return PruneDominated(polygon, BuildChordSet(polygon));
}

Grid SyntheticGrid(std::vector<OrthoSegment> segments) {
  Grid grid;
  grid.origins.resize(segments.size());
  grid.segments = std::move(segments);
  return grid;
}

Graph IntersectionGraph(const Grid& grid) {
  const int n = static_cast<int>(grid.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Intersects(grid.segments[i], grid.segments[j])) g.AddEdge(i, j);
    }
  }
  return g;
}

bool IsSimpleGrid(const Grid& grid, const OrthoPolygon& polygon) {
  return std::all_of(grid.segments.begin(), grid.segments.end(),
                     [&](const OrthoSegment& s) {
                       return ContainsPoint(polygon, s.first()) == Location::kBoundary &&
                              ContainsPoint(polygon, s.second()) == Location::kBoundary;
                     });
}

bool IsConnected(const Grid& grid) {
  if (grid.size() <= 1) return true;
  const Graph g = IntersectionGraph(grid);
  std::vector<char> seen(grid.size(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == grid.size();
}

}  // namespace slidecam
