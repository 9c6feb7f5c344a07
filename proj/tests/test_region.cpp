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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "slidecam/generator.hpp"
#include "slidecam/region.hpp"
#include "test_support.hpp"

namespace slidecam {
namespace {

using testing::CellSet;
using testing::Cells;
using testing::FromCells;

RectilinearRegion R(std::vector<Rect> rects) { return RectilinearRegion::FromRects(rects); }

TEST_CASE("region construction") {
  const RectilinearRegion a = RectilinearRegion::FromRect({0, 4, 0, 3});
  CHECK(a.area() == 12);
  CHECK(a.bounding_box() == Rect{0, 4, 0, 3});
  CHECK(a.rects().size() == 1);
  CHECK(RectilinearRegion::FromRect({1, 1, 0, 3}).empty());
  CHECK(RectilinearRegion().empty());
}

TEST_CASE("equal point sets compare equal") {
  const RectilinearRegion split = R({{0, 2, 0, 3}, {2, 4, 0, 3}});
  const RectilinearRegion whole = R({{0, 4, 0, 3}});
  const RectilinearRegion stacked = R({{0, 4, 0, 1}, {0, 4, 1, 3}});
  CHECK(split == whole);
  CHECK(stacked == whole);
  CHECK(whole.rects().size() == 1);
}

TEST_CASE("boolean operations") {
  const RectilinearRegion a = R({{0, 4, 0, 4}});
  const RectilinearRegion b = R({{2, 6, 2, 6}});
  CHECK(RegionUnion(a, b).area() == 28);
  CHECK(RegionIntersection(a, b) == R({{2, 4, 2, 4}}));
  CHECK(RegionDifference(a, b).area() == 12);
  CHECK(RegionDifference(a, a).empty());
  CHECK(RegionContains(a, R({{1, 2, 1, 2}})));
  CHECK_FALSE(RegionContains(a, b));
  CHECK(RegionContains(a, RectilinearRegion()));
}

TEST_CASE("difference is regularized") {
  // Removing the left half of a shared edge leaves no sliver.
  const RectilinearRegion a = R({{0, 2, 0, 2}});
  const RectilinearRegion b = R({{0, 2, 0, 2}, {2, 3, 0, 2}});
  CHECK(RegionDifference(a, b).empty());
  CHECK(RegionIntersection(R({{0, 1, 0, 1}}), R({{1, 2, 0, 1}})).empty());
}

TEST_CASE("covers") {
  const RectilinearRegion l = RectilinearRegion::FromPolygon(testing::LShape());
  CHECK(l.Covers({0, 4, 0, 2}));
  CHECK(l.Covers({0, 2, 0, 4}));
  CHECK_FALSE(l.Covers({0, 4, 0, 3}));
  CHECK(l.Covers({3, 3, 3, 3}));  // empty rectangles are trivially covered
}

TEST_CASE("components") {
  SUBCASE("corner contact does not connect") {
    const auto parts = RegionComponents(R({{0, 1, 0, 1}, {1, 2, 1, 2}}));
    CHECK(parts.size() == 2);
  }
  SUBCASE("edge contact connects") {
    CHECK(RegionComponents(R({{0, 1, 0, 1}, {1, 2, 0, 2}})).size() == 1);
  }
  SUBCASE("separate slabs") {
    CHECK(RegionComponents(R({{0, 1, 0, 1}, {3, 4, 0, 1}})).size() == 2);
  }
  SUBCASE("empty") { CHECK(RegionComponents(RectilinearRegion()).empty()); }
}

TEST_CASE("polygon regions have the polygon's area") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const OrthoPolygon p = GeneratePolygon(seed, 4 + 2 * static_cast<int>(seed % 12));
    CAPTURE(seed);
    CHECK(2 * RectilinearRegion::FromPolygon(p).area() == p.twice_area());
  }
}

// Cell-set model of the same operations.
CellSet RandomCells(std::mt19937_64& rng) {
  std::vector<Rect> rects;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    const Coord x0 = static_cast<Coord>(rng() % 8), y0 = static_cast<Coord>(rng() % 8);
    const Coord x1 = x0 + 1 + static_cast<Coord>(rng() % 4);
    const Coord y1 = y0 + 1 + static_cast<Coord>(rng() % 4);
    rects.push_back({x0, x1, y0, y1});
  }
  return Cells(RectilinearRegion::FromRects(rects));
}

int FloodComponents(const CellSet& cells) {
  CellSet seen;
  int count = 0;
  for (const auto& start : cells) {
    if (seen.count(start)) continue;
    ++count;
    std::vector<std::pair<Coord, Coord>> stack = {start};
    seen.insert(start);
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        const std::pair<Coord, Coord> next{x + dx, y + dy};
        if (cells.count(next) && !seen.count(next)) {
          seen.insert(next);
          stack.push_back(next);
        }
      }
    }
  }
  return count;
}

TEST_CASE("operations agree with the cell model") {
  std::mt19937_64 rng(20261018);
  for (int round = 0; round < 300; ++round) {
    const CellSet ca = RandomCells(rng);
    const CellSet cb = RandomCells(rng);
    const RectilinearRegion a = FromCells(ca);
    const RectilinearRegion b = FromCells(cb);
    CellSet u, d, i;
    std::set_union(ca.begin(), ca.end(), cb.begin(), cb.end(), std::inserter(u, u.end()));
    std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::inserter(d, d.end()));
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                          std::inserter(i, i.end()));
    CHECK(Cells(RegionUnion(a, b)) == u);
    CHECK(Cells(RegionDifference(a, b)) == d);
    CHECK(Cells(RegionIntersection(a, b)) == i);
    CHECK(RegionUnion(a, b) == FromCells(u));
    CHECK(RegionContains(a, b) == std::includes(ca.begin(), ca.end(), cb.begin(), cb.end()));
    CHECK(static_cast<int>(RegionComponents(a).size()) == FloodComponents(ca));
    Coord total = 0;
    for (const RectilinearRegion& part : RegionComponents(a)) total += part.area();
    CHECK(total == a.area());
  }
}

}  // namespace
}  // namespace slidecam
