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
#include <vector>

#include "slidecam/error.hpp"
#include "slidecam/grid.hpp"
#include "slidecam/oracle.hpp"
#include "slidecam/pipeline.hpp"
#include "slidecam/visibility.hpp"
#include "test_support.hpp"

namespace slidecam {
namespace {

using testing::Fixture;

OrthoSegment H(Coord y, Coord lo, Coord hi) { return OrthoSegment::Horizontal(y, lo, hi); }
OrthoSegment V(Coord x, Coord lo, Coord hi) { return OrthoSegment::Vertical(x, lo, hi); }

struct Frozen {
  const char* file;
  int msc;
  int mgsc;
  int mmgg;
};

// Computed once by the oracles and frozen.
constexpr Frozen kFrozen[] = {
    {"rectangle.poly", 1, 2, 0},      {"l_shape.poly", 1, 2, 1},
    {"plus.poly", 1, 2, 1},           {"staircase2.poly", 1, 2, 1},
    {"comb3.poly", 1, 2, 2},          {"comb4.poly", 1, 2, 2},
    {"zigzag.poly", 2, 2, 2},         {"notch_residue.poly", 3, 4, 4},
    {"three_regions.poly", 3, 4, 4},  {"grid_gap.poly", 3, 4, 5},
};

TEST_CASE("oracle optima on fixtures are frozen") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.file);
    const OrthoPolygon p = Fixture(f.file);
    CHECK(OptMsc(p).value == f.msc);
    CHECK(OptMgsc(p).value == f.mgsc);
    CHECK(OptMmgg(IntersectionGraph(BuildGrid(p))).value == f.mmgg);
  }
}

TEST_CASE("oracle witnesses are feasible") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.file);
    const OrthoPolygon p = Fixture(f.file);
    const OracleResult msc = OptMsc(p);
    CHECK(static_cast<int>(msc.witness.size()) == msc.value);
    CHECK(CoversPolygon(p, msc.witness));

    const OracleResult mgsc = OptMgsc(p);
    CHECK(static_cast<int>(mgsc.witness.size()) == mgsc.value);
    CHECK(CoversPolygon(p, mgsc.witness));
    for (std::size_t i = 0; i < mgsc.witness.size(); ++i) {
      bool guarded = false;
      for (std::size_t j = 0; j < mgsc.witness.size() && !guarded; ++j) {
        guarded = j != i && CameraGuardsCamera(p, mgsc.witness[j], mgsc.witness[i]);
      }
      CHECK(guarded);
    }

    const Graph g = IntersectionGraph(BuildGrid(p));
    const GraphOracleResult mmgg = OptMmgg(g);
    CHECK(VerifyMmgg(g, MmggSolution{mmgg.witness}));
  }
}

TEST_CASE("msc witnesses on small fixtures") {
  CHECK(OptMsc(Fixture("rectangle.poly")).witness == std::vector{V(0, 0, 3)});
  CHECK(OptMsc(Fixture("l_shape.poly")).witness == std::vector{H(2, 0, 4)});
  CHECK(OptMsc(Fixture("comb3.poly")).witness == std::vector{H(1, 0, 7)});
  CHECK(OptMsc(Fixture("zigzag.poly")).witness == std::vector{H(1, 0, 2), H(3, 1, 3)});
  CHECK(OptMgsc(Fixture("l_shape.poly")).witness == std::vector{H(2, 0, 4), H(2, 0, 4)});
  CHECK(OptMgsc(Fixture("zigzag.poly")).witness == std::vector{H(1, 0, 2), V(2, 1, 5)});
}

TEST_CASE("critical oracle") {
  SUBCASE("zigzag residue needs one camera") {
    const OrthoPolygon p = Fixture("zigzag.poly");
    const GuardSet g = SolveMsc(p);
    const OracleResult r = OptCritical(p, g.trace.critical);
    CHECK(r.value == 1);
    CHECK(r.witness == std::vector{H(3, 1, 3)});
  }
  SUBCASE("one chord guards all three regions") {
    const OrthoPolygon p = Fixture("three_regions.poly");
    const GuardSet g = SolveMsc(p);
    REQUIRE(g.trace.critical.size() == 3);
    const OracleResult r = OptCritical(p, g.trace.critical);
    CHECK(r.value == 1);
    CHECK(r.witness == std::vector{V(8, 8, 14)});
  }
  SUBCASE("no regions") {
    CHECK(OptCritical(Fixture("l_shape.poly"), {}).value == 0);
  }
}

TEST_CASE("mmgg oracle on small graphs") {
  SUBCASE("path a-b-c") {
    const GraphOracleResult r = OptMmgg(testing::Path(3));
    CHECK(r.value == 2);
    CHECK(r.witness == std::vector{0, 1});
  }
  SUBCASE("star with four leaves") {
    const GraphOracleResult r = OptMmgg(testing::Star(4));
    CHECK(r.value == 2);
    CHECK(r.witness == std::vector{0, 1});
  }
  SUBCASE("isolated node guards itself") {
    CHECK(OptMmgg(Graph(1)).value == 1);
  }
  SUBCASE("empty graph") { CHECK(OptMmgg(Graph(0)).value == 0); }
}

TEST_CASE("oracle caps") {
  const OrthoPolygon p = Fixture("notch_residue.poly");
  SUBCASE("segment cap") {
    try {
      OptMsc(p, 3);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kTooLarge);
    }
  }
  SUBCASE("graph cap") {
    try {
      OptMmgg(testing::Path(20));
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kTooLarge);
    }
  }
}

TEST_CASE("oracle candidates") {
  CHECK(OracleCandidates(Fixture("rectangle.poly")) == std::vector{V(0, 0, 3)});
  CHECK(OracleCandidates(Fixture("l_shape.poly")) == std::vector{H(2, 0, 4)});
}

TEST_CASE("optima do not change when the polygon is scaled") {
  for (const char* file : {"l_shape.poly", "zigzag.poly", "comb3.poly"}) {
    CAPTURE(file);
    const OrthoPolygon p = Fixture(file);
    const OrthoPolygon doubled = p.Scaled(2);
    CHECK(OptMsc(doubled).value == OptMsc(p).value);
    CHECK(OptMgsc(doubled).value == OptMgsc(p).value);
  }
}

TEST_CASE("chain of optima") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.file);
    CHECK(f.mgsc <= 2 * f.msc);
    if (std::string(f.file) != "grid_gap.poly") CHECK(f.mmgg <= f.mgsc);
  }
}

TEST_CASE("covering the polygon can be cheaper than guarding the grid") {
  // The guarded optimum consists of two crossing pairs of grid segments, but
  // none of them sees grid segment V 9 7 10, so it is not a grid solution.
  const OrthoPolygon p = Fixture("grid_gap.poly");
  const OracleResult mgsc = OptMgsc(p);
  CHECK(mgsc.witness == std::vector{H(6, 5, 8), H(6, 10, 15), V(8, 6, 10), V(11, 5, 10)});
  for (const OrthoSegment& c : mgsc.witness) CHECK_FALSE(CameraGuardsCamera(p, c, V(9, 7, 10)));
  CHECK(OptMmgg(IntersectionGraph(BuildGrid(p))).value == 5);
}

}  // namespace
}  // namespace slidecam
