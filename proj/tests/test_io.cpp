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

#include <stdexcept>
#include <string>
#include <vector>

#include "slidecam/error.hpp"
#include "slidecam/generator.hpp"
#include "slidecam/io.hpp"
#include "slidecam/pipeline.hpp"
#include "slidecam/report.hpp"
#include "slidecam/svg.hpp"
#include "test_support.hpp"

namespace slidecam {
namespace {

using testing::Fixture;

ErrorCode ParseError(const std::string& text) {
  try {
    ParsePolygon(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("text was accepted");
  return ErrorCode::kInfeasible;
}

TEST_CASE("parse polygon files") {
  const OrthoPolygon p = ParsePolygon("# rectangle\n4\n0 0\n4 0\n\n4 3  # corner\n0 3\n");
  CHECK(p == testing::Rectangle());
  CHECK(ParsePolygon("4\n+0 0\n4 0\n4 3\n0 3") == testing::Rectangle());
}

TEST_CASE("parse errors") {
  CHECK(ParseError("") == ErrorCode::kParse);
  CHECK(ParseError("# nothing\n") == ErrorCode::kParse);
  CHECK(ParseError("4 4\n0 0\n4 0\n4 3\n0 3\n") == ErrorCode::kParse);
  CHECK(ParseError("5\n0 0\n4 0\n4 3\n0 3\n") == ErrorCode::kParse);
  CHECK(ParseError("4\n0 0\n4 0\n4 3\n0\n") == ErrorCode::kParse);
  CHECK(ParseError("4\n0 0\n4 0\n4 x\n0 3\n") == ErrorCode::kParse);
  CHECK(ParseError("4\n0 0\n4 0\n4 3.5\n0 3\n") == ErrorCode::kParse);
  CHECK(ParseError("-1\n") == ErrorCode::kParse);
  CHECK(ParseError("4\n0 0\n4 1\n4 3\n0 3\n") == ErrorCode::kNonOrthogonalEdge);
  try {
    ReadPolygonFile(std::string(SLIDECAM_TEST_DATA_DIR) + "/missing.poly");
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}

TEST_CASE("format round trip") {
  for (const char* file : {"l_shape.poly", "zigzag.poly", "three_regions.poly"}) {
    const OrthoPolygon p = Fixture(file);
    CHECK(ParsePolygon(FormatPolygon(p)) == p);
  }
  CHECK(FormatPolygon(testing::Rectangle()) == "4\n0 0\n4 0\n4 3\n0 3\n");
  const std::vector<OrthoSegment> cams = {OrthoSegment::Horizontal(2, 0, 4),
                                          OrthoSegment::Vertical(0, 0, 3)};
  CHECK(FormatCameras(cams) == "H 2 0 4\nV 0 0 3\n");
  CHECK(FormatCameras({}).empty());
}

TEST_CASE("generator") {
  SUBCASE("seed 1 with 4 vertices is a rectangle") {
    const OrthoPolygon p = GeneratePolygon(1, 4);
    CHECK(p.size() == 4);
    CHECK(ReflexVertices(p).empty());
  }
  SUBCASE("seed 7 with 12 vertices") {
    const OrthoPolygon p = GeneratePolygon(7, 12);
    CHECK(p.size() == 12);
    CHECK(ValidatePolygon(p.vertices(), false) == p);
  }
  SUBCASE("deterministic") {
    CHECK(FormatPolygon(GeneratePolygon(42, 20)) == FormatPolygon(GeneratePolygon(42, 20)));
    CHECK(GeneratePolygon(42, 20) != GeneratePolygon(43, 20));
  }
  SUBCASE("options") {
    GeneratorOptions unit;
    unit.max_cell_size = 1;
    const OrthoPolygon p = GeneratePolygon(9, 16, unit);
    CHECK(p.size() == 16);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.edge(i).span().length() >= 1);
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(GeneratePolygon(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(GeneratePolygon(1, 2), std::invalid_argument);
    GeneratorOptions bad;
    bad.max_cell_size = 0;
    CHECK_THROWS_AS(GeneratePolygon(1, 8, bad), std::invalid_argument);
  }
}

TEST_CASE("svg rendering") {
  const OrthoPolygon p = Fixture("zigzag.poly");
  const GuardSet g = SolveMsc(p);
  const std::string svg = RenderSvg(p, g);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("url(#hatch)") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("#d62728") != std::string::npos);
  CHECK(RenderSvg(p, SolveMsc(p)) == svg);
  const std::string plain = RenderSvg(testing::LShape(), SolveMsc(testing::LShape()));
  CHECK(plain.find("stroke-dasharray") == std::string::npos);
}

TEST_CASE("run reports") {
  const OrthoPolygon p = Fixture("zigzag.poly");
  const RunReport r = MakeReport("zigzag", SolveMsc(p));
  CHECK(r.cameras == 3);
  CHECK_FALSE(r.msc_ratio);
  const auto j = ToJson(r);
  CHECK(j["instance"] == "zigzag");
  CHECK(j["n"] == 12);
  CHECK(j["grid_segments"] == 4);
  CHECK(j["critical_regions"] == 1);
  CHECK(j["cameras"] == 3);
  CHECK_FALSE(j.contains("ratios"));
  CHECK(j.contains("timings_ms"));
}

TEST_CASE("verification") {
  SUBCASE("L-shape meets every bound with ratio 1") {
    const Verification v = VerifyInstance(testing::LShape(), "l");
    CHECK(v.ok());
    CHECK(v.skipped.empty());
    CHECK(*v.report.msc_ratio == doctest::Approx(1.0));
    CHECK(*v.report.mgsc_ratio == doctest::Approx(1.0));
  }
  SUBCASE("zigzag") {
    const Verification v = VerifyInstance(Fixture("zigzag.poly"), "z");
    CHECK(v.ok());
    CHECK(*v.report.optima.msc == 2);
    CHECK(*v.report.optima.critical == 1);
    CHECK(*v.report.msc_ratio == doctest::Approx(1.5));
  }
  SUBCASE("comb") {
    const Verification v = VerifyInstance(Fixture("comb4.poly"), "c");
    CHECK(v.ok());
    CHECK(*v.report.msc_ratio <= 3.5);
  }
  SUBCASE("three regions break the critical bound") {
    const Verification v = VerifyInstance(Fixture("three_regions.poly"), "t");
    CHECK_FALSE(v.ok());
    int failed = 0;
    for (const BoundCheck& c : v.checks) {
      if (!c.holds) {
        ++failed;
        CHECK(c.name == "critical <= 3/2 opt");
      }
    }
    CHECK(failed == 1);
  }
  SUBCASE("caps are reported, not fatal") {
    VerifyOptions tight;
    tight.segment_cap = 2;
    const Verification v = VerifyInstance(Fixture("zigzag.poly"), "z", tight);
    CHECK_FALSE(v.skipped.empty());
    CHECK(v.ok());
  }
}

}  // namespace
}  // namespace slidecam
