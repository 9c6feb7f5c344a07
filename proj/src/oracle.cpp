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

#include "slidecam/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "slidecam/error.hpp"
#include "slidecam/grid.hpp"
#include "slidecam/region.hpp"
#include "slidecam/visibility.hpp"

namespace slidecam {
namespace {

using CellMask = boost::dynamic_bitset<>;

// Cells of the arrangement of the polygon's vertex coordinates. Every region
// the oracles handle is a union of these cells.
class CellArrangement {
 public:
  explicit CellArrangement(const OrthoPolygon& polygon)
      : xs_(VertexCoordinates(polygon, true)),
        ys_(VertexCoordinates(polygon, false)) {
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
      for (std::size_t j = 0; j + 1 < ys_.size(); ++j) {
        cells_.push_back({xs_[i], xs_[i + 1], ys_[j], ys_[j + 1]});
      }
    }
  }

  CellMask Mask(const RectilinearRegion& region) const {
    CellMask mask(cells_.size());
    Coord area = 0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (region.Covers(cells_[c])) {
        mask.set(c);
        area += cells_[c].area();
      }
    }
    if (area != region.area()) {
      throw Error(ErrorCode::kInfeasible, "region not aligned to vertex cells");
    }
    return mask;
  }

 private:
  std::vector<Coord> xs_;
  std::vector<Coord> ys_;
  std::vector<Rect> cells_;
};

void CheckCap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap || n > 63) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + ": " +
                                          std::to_string(n) + " exceeds cap " +
                                          std::to_string(cap));
  }
}

// Enumerates index subsets of one size in lexicographic order whose masks
// jointly cover `target`; returns false from `visit` to stop.
class CoverEnumerator {
 public:
  CoverEnumerator(std::vector<CellMask> masks, CellMask target)
      : masks_(std::move(masks)), target_(std::move(target)) {
    // coverers_[cell]: bitmask of candidates covering the cell.
    coverers_.assign(target_.size(), 0);
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      for (std::size_t cell = 0; cell < target_.size(); ++cell) {
        if (masks_[c].test(cell)) coverers_[cell] |= std::uint64_t{1} << c;
      }
    }
  }

  template <typename Visit>
  bool ForEach(std::size_t size, Visit visit) const {
    std::vector<int> picked;
    return Recurse(size, 0, target_, picked, visit);
  }

 private:
  template <typename Visit>
  bool Recurse(std::size_t size, std::size_t next, const CellMask& uncovered,
               std::vector<int>& picked, Visit& visit) const {
    const std::size_t first = uncovered.find_first();
    if (picked.size() == size) {
      return first == CellMask::npos ? visit(picked) : true;
    }
    if (first != CellMask::npos) {
      // Some remaining candidate must cover the first uncovered cell.
      const std::uint64_t later = next >= 64 ? 0 : (~std::uint64_t{0} << next);
      if ((coverers_[first] & later) == 0) return true;
    }
    for (std::size_t c = next; c + (size - picked.size()) <= masks_.size(); ++c) {
      picked.push_back(static_cast<int>(c));
      const bool go_on = Recurse(size, c + 1, uncovered - masks_[c], picked, visit);
      picked.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<CellMask> masks_;
  CellMask target_;
  std::vector<std::uint64_t> coverers_;
};

struct Prepared {
  std::vector<OrthoSegment> candidates;
  CoverEnumerator enumerator;
};

Prepared Prepare(const OrthoPolygon& polygon, const RectilinearRegion& target,
                 std::size_t cap) {
  std::vector<OrthoSegment> candidates = OracleCandidates(polygon);
  CheckCap(candidates.size(), cap, "candidate segments");
  const CellArrangement cells(polygon);
  std::vector<CellMask> masks;
  for (const OrthoSegment& s : candidates) {
    masks.push_back(cells.Mask(CameraVisibility(polygon, s)));
  }
  return {std::move(candidates), CoverEnumerator(std::move(masks), cells.Mask(target))};
}

OracleResult MinimumCover(const OrthoPolygon& polygon,
                          const RectilinearRegion& target, std::size_t cap) {
  if (target.empty()) return {};
  const Prepared prep = Prepare(polygon, target, cap);
  for (std::size_t k = 1; k <= prep.candidates.size(); ++k) {
    std::optional<std::vector<int>> found;
    prep.enumerator.ForEach(k, [&](const std::vector<int>& picked) {
      found = picked;
      return false;
    });
    if (found) {
      OracleResult result{static_cast<int>(k), {}};
      for (int i : *found) result.witness.push_back(prep.candidates[i]);
      return result;
    }
  }
  throw Error(ErrorCode::kInfeasible, "candidates do not cover the target");
}

}  // namespace

std::vector<OrthoSegment> OracleCandidates(const OrthoPolygon& polygon) {
  std::vector<OrthoSegment> candidates = BuildGrid(polygon).segments;
  if (candidates.empty()) {
    const Interval ys = polygon.y_range();
    candidates.push_back(OrthoSegment::Vertical(polygon.x_range().lo, ys.lo, ys.hi));
  }
  return candidates;
}

OracleResult OptMsc(const OrthoPolygon& polygon, std::size_t cap) {
  return MinimumCover(polygon, RectilinearRegion::FromPolygon(polygon), cap);
}

OracleResult OptCritical(const OrthoPolygon& polygon,
                         std::span<const CriticalRegion> regions,
                         std::size_t cap) {
  RectilinearRegion target;
  for (const CriticalRegion& r : regions) target = RegionUnion(target, r.region);
  return MinimumCover(polygon, target, cap);
}

OracleResult OptMgsc(const OrthoPolygon& polygon, std::size_t cap) {
  const Prepared prep =
      Prepare(polygon, RectilinearRegion::FromPolygon(polygon), cap);
  const std::size_t n = prep.candidates.size();
  std::vector<std::vector<char>> guards(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        guards[i][j] =
            CameraGuardsCamera(polygon, prep.candidates[i], prep.candidates[j]);
      }
    }
  }

  // A covering set X costs |X| plus one doubled track per member that no
  // other member guards. Cost >= |X|, so stop once |X| reaches the best cost.
  int best = std::numeric_limits<int>::max();
  std::vector<int> best_set;
  std::vector<int> best_doubled;
  for (std::size_t k = 1; k <= n && static_cast<int>(k) < best; ++k) {
    prep.enumerator.ForEach(k, [&](const std::vector<int>& picked) {
      std::vector<int> doubled;
      for (int i : picked) {
        const bool guarded = std::any_of(picked.begin(), picked.end(),
                                         [&](int j) { return guards[j][i] != 0; });
        if (!guarded) doubled.push_back(i);
      }
      const int cost = static_cast<int>(picked.size() + doubled.size());
      if (cost < best) {
        best = cost;
        best_set = picked;
        best_doubled = std::move(doubled);
      }
      return true;
    });
  }
  if (best == std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::kInfeasible, "candidates do not cover the polygon");
  }
  OracleResult result{best, {}};
  for (int i : best_set) result.witness.push_back(prep.candidates[i]);
  for (int i : best_doubled) result.witness.push_back(prep.candidates[i]);
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

GraphOracleResult OptMmgg(const Graph& graph, std::size_t cap) {
  const int n = graph.node_count();
  CheckCap(static_cast<std::size_t>(n), cap, "graph nodes");
  if (n == 0) return {};

  auto feasible = [&](std::uint64_t set) {
    for (int v = 0; v < n; ++v) {
      bool neighbor_in_set = false;
      for (int w : graph.neighbors(v)) {
        if (set >> w & 1) neighbor_in_set = true;
      }
      const bool in_set = (set >> v & 1) != 0;
      if (in_set && !neighbor_in_set && !graph.isolated(v)) return false;
      if (!in_set && !neighbor_in_set) return false;
    }
    return true;
  };

  for (int k = 1; k <= n; ++k) {
    // Lexicographic walk over k-combinations.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t set = 0;
      for (int i : idx) set |= std::uint64_t{1} << i;
      if (feasible(set)) return {k, idx};
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInfeasible, "no guarded cover");
}

}  // namespace slidecam
