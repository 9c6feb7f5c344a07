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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slidecam/error.hpp"
#include "slidecam/generator.hpp"
#include "slidecam/io.hpp"
#include "slidecam/pipeline.hpp"
#include "slidecam/report.hpp"
#include "slidecam/svg.hpp"
#include "slidecam/visibility.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitOracleCap = 4;

bool IsInputError(slidecam::ErrorCode code) {
  using slidecam::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kNonOrthogonalEdge:
    case ErrorCode::kSelfIntersecting:
    case ErrorCode::kNotClosed:
    case ErrorCode::kCollinearRedundantVertex:
      return true;
    default:
      return false;
  }
}

struct SolveArgs {
  std::string file;
  bool report = false;
  bool check = false;
  bool guarded = false;
  std::string svg;
};

int RunSolve(const SolveArgs& args) {
  const slidecam::OrthoPolygon polygon = slidecam::ReadPolygonFile(args.file);
  const slidecam::GuardSet solution =
      args.guarded ? slidecam::SolveMgsc(polygon) : slidecam::SolveMsc(polygon);
  std::cout << slidecam::FormatCameras(solution.cameras);
  if (args.report) {
    std::cout << slidecam::ToJson(slidecam::MakeReport(args.file, solution)).dump()
              << '\n';
  }
  if (!args.svg.empty()) {
    std::ofstream out(args.svg);
    if (!out) {
      std::cerr << "cannot write " << args.svg << '\n';
      return kExitInternal;
    }
    out << slidecam::RenderSvg(polygon, solution);
  }
  if (args.check && !slidecam::CoversPolygon(polygon, solution.cameras)) {
    std::cerr << "check failed: cameras do not cover the polygon\n";
    return kExitInternal;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  bool strict = false;
  std::size_t cap = 22;
};

int RunVerify(const VerifyArgs& args) {
  const slidecam::OrthoPolygon polygon = slidecam::ReadPolygonFile(args.file);
  slidecam::VerifyOptions options;
  options.segment_cap = args.cap;
  const slidecam::Verification v =
      slidecam::VerifyInstance(polygon, args.file, options);
  std::cout << slidecam::ToJson(v.report).dump() << '\n';
  for (const auto& check : v.checks) {
    std::cout << (check.holds ? "PASS " : "FAIL ") << check.name << ": "
              << check.detail << '\n';
  }
  for (const auto& skipped : v.skipped) std::cout << "SKIP " << skipped << '\n';
  if (!v.ok()) return kExitInternal;
  if (args.strict && !v.skipped.empty()) return kExitOracleCap;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-camera guarding of orthogonal polygons"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Place cameras covering a polygon file");
  solve->add_option("file", solve_args.file, "Polygon file")->required();
  solve->add_flag("--report", solve_args.report, "Print a JSON run report");
  solve->add_option("--svg", solve_args.svg, "Write an SVG rendering to PATH");
  solve->add_flag("--check", solve_args.check, "Verify that the cameras cover the polygon");
  solve->add_flag("--guarded", solve_args.guarded,
                  "Return a guarded camera set (every camera seen by another)");

  std::uint64_t seed = 1;
  int vertices = 4;
  auto* gen = app.add_subcommand("gen", "Print a random orthogonal polygon");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--vertices", vertices, "Vertex count (even, >= 4)")
      ->check(CLI::Range(4, 1 << 20));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare against exhaustive optima");
  verify->add_option("file", verify_args.file, "Polygon file")->required();
  verify->add_flag("--strict", verify_args.strict,
                   "Exit with 4 when an oracle is skipped for size");
  verify->add_option("--cap", verify_args.cap, "Largest grid the oracles enumerate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return RunSolve(solve_args);
    if (*gen) {
      if (vertices % 2 != 0) {
        std::cerr << "--vertices must be even\n";
        return kExitParse;
      }
      std::cout << slidecam::FormatPolygon(slidecam::GeneratePolygon(seed, vertices));
      return kExitOk;
    }
    if (*verify) return RunVerify(verify_args);
  } catch (const slidecam::Error& e) {
    std::cerr << e.what() << '\n';
    return IsInputError(e.code()) ? kExitParse : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
