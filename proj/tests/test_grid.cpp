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
#include "slidecam/grid.hpp"
#include "slidecam/visibility.hpp"
#include "test_support.hpp"

namespace slidecam {
namespace {

using testing::Fixture;

OrthoSegment H(Coord y, Coord lo, Coord hi) { return OrthoSegment::Horizontal(y, lo, hi); }
OrthoSegment V(Coord x, Coord lo, Coord hi) { return OrthoSegment::Vertical(x, lo, hi); }

TEST_CASE("chord sets") {
  CHECK(BuildChordSet(testing::Rectangle()).empty());
  CHECK(BuildChordSet(testing::LShape()) == std::vector{H(2, 0, 4), V(2, 0, 4)});
  CHECK(BuildChordSet(testing::TwoStepStaircase()) ==
        std::vector{H(2, 0, 4), H(4, 0, 6), V(2, 0, 6), V(4, 2, 6)});
  CHECK(BuildChordSet(testing::PlusSign()) ==
        std::vector{H(1, 0, 3), H(2, 0, 3), V(1, 0, 3), V(2, 0, 3)});
  CHECK(BuildChordSet(Fixture("comb3.poly")) ==
        std::vector{H(1, 0, 7), V(1, 0, 3), V(3, 0, 3), V(4, 0, 3), V(6, 0, 3)});
}

TEST_CASE("pruning") {
  SUBCASE("L-shape keeps the horizontal chord") {
    const Grid g = BuildGrid(testing::LShape());
    CHECK(g.segments == std::vector{H(2, 0, 4)});
    CHECK(g.origins == std::vector<std::vector<Point>>{{{2, 2}}});
  }
  SUBCASE("plus collapses to one chord") {
    CHECK(BuildGrid(testing::PlusSign()).segments == std::vector{H(1, 0, 3)});
  }
  SUBCASE("staircase") {
    CHECK(BuildGrid(testing::TwoStepStaircase()).segments == std::vector{H(4, 0, 6)});
  }
  SUBCASE("comb keeps one chord per tooth") {
    CHECK(BuildGrid(Fixture("comb3.poly")).segments ==
          std::vector{H(1, 0, 7), V(1, 0, 3), V(3, 0, 3), V(6, 0, 3)});
  }
  SUBCASE("input order does not matter") {
    const OrthoPolygon p = Fixture("notch_residue.poly");
    std::vector<OrthoSegment> chords = BuildChordSet(p);
    const Grid reference = PruneDominated(p, chords);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
      std::shuffle(chords.begin(), chords.end(), rng);
      CHECK(PruneDominated(p, chords).segments == reference.segments);
    }
  }
  SUBCASE("no chords") { CHECK(PruneDominated(testing::Rectangle(), {}).empty()); }
}

TEST_CASE("intersection graphs") {
  SUBCASE("comb is a star around the spine") {
    const Graph g = IntersectionGraph(BuildGrid(Fixture("comb3.poly")));
    CHECK(g.node_count() == 4);
    CHECK(g.neighbors(0) == std::vector{1, 2, 3});
    CHECK(g.edges().size() == 3);
  }
  SUBCASE("four teeth") {
    const Graph g = IntersectionGraph(BuildGrid(Fixture("comb4.poly")));
    CHECK(g.node_count() == 5);
    CHECK(g.degree(0) == 4);
    CHECK(g.edges().size() == 4);
  }
  SUBCASE("two crossing chords of the plus") {
    const Graph g = IntersectionGraph(SyntheticGrid({H(1, 0, 3), V(1, 0, 3)}));
    CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}});
  }
  SUBCASE("parallel disjoint segments") {
    CHECK(IntersectionGraph(SyntheticGrid({H(0, 0, 1), H(2, 0, 1)})).edges().empty());
  }
}

TEST_CASE("grid shape predicates") {
  const OrthoPolygon l = testing::LShape();
  CHECK(IsSimpleGrid(BuildGrid(l), l));
  CHECK_FALSE(IsSimpleGrid(SyntheticGrid({H(1, 1, 3)}), l));
  CHECK(IsConnected(SyntheticGrid({})));
  CHECK(IsConnected(SyntheticGrid({H(1, 0, 4)})));
  CHECK_FALSE(IsConnected(SyntheticGrid({H(0, 0, 1), H(2, 0, 1)})));
  CHECK(IsConnected(SyntheticGrid({H(0, 0, 1), V(1, 0, 2), H(2, 0, 1)})));
}

TEST_CASE("generated grids are simple, connected and pruned") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const OrthoPolygon p = GeneratePolygon(seed, 4 + 2 * static_cast<int>((seed - 1) % 19));
    const Grid g = BuildGrid(p);
    CAPTURE(seed);
    CHECK(IsSimpleGrid(g, p));
    CHECK(IsConnected(g));
    std::vector<RectilinearRegion> vis;
    for (const OrthoSegment& s : g.segments) vis.push_back(CameraVisibility(p, s));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        if (g.segments[i].orientation == g.segments[j].orientation) {
          CHECK_FALSE(RegionContains(vis[i], vis[j]));
        } else {
          CHECK(vis[i] != vis[j]);
        }
      }
    }
    // Every removed chord is dominated by a survivor.
    for (const OrthoSegment& c : BuildChordSet(p)) {
      const RectilinearRegion cv = CameraVisibility(p, c);
      CHECK(std::any_of(vis.begin(), vis.end(),
                        [&](const RectilinearRegion& v) { return RegionContains(v, cv); }));
    }
  }
}

}  // namespace
}  // namespace slidecam
