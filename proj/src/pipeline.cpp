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

#include "slidecam/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "slidecam/error.hpp"
#include "slidecam/visibility.hpp"

namespace slidecam {
namespace {

class PhaseClock {
 public:
  double Lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

OrthoSegment LeftEdge(const OrthoPolygon& polygon) {
  const Interval ys = polygon.y_range();
  return OrthoSegment::Vertical(polygon.x_range().lo, ys.lo, ys.hi);
}

std::vector<OrthoSegment> GuardsOf(const Grid& grid, const MmggSolution& solution) {
  std::vector<OrthoSegment> out;
  for (int i : solution.chosen) out.push_back(grid.segments[i]);
  return out;
}

bool OnlyStaircases(const OrthoPolygon& polygon,
                    const std::vector<OrthoSegment>& guards) {
  const auto components = RegionComponents(UncoveredRegion(polygon, guards));
  return std::all_of(components.begin(), components.end(), IsStaircase);
}

}  // namespace

GuardSet SolveMsc(const OrthoPolygon& polygon) {
  GuardSet out;
  RunStats& stats = out.stats;
  PipelineTrace& trace = out.trace;
  stats.vertices = polygon.size();
  stats.reflex = ReflexVertices(polygon).size();
  if (stats.reflex == 0) {
    out.cameras.push_back(LeftEdge(polygon));
    out.provenance.push_back(Provenance::kGrid);
    return out;
  }

  PhaseClock clock;
  const std::vector<OrthoSegment> chords = BuildChordSet(polygon);
  stats.chords = chords.size();
  stats.timings.chords_ms = clock.Lap();

  trace.grid = PruneDominated(polygon, chords);
  stats.grid_segments = trace.grid.size();
  stats.timings.prune_ms = clock.Lap();

  const Graph grid_graph = IntersectionGraph(trace.grid);
  trace.mmgg = SolveMmggExact(grid_graph);
  // Optima are tried in lexicographic order until one leaves only staircases.
  std::optional<MmggSolution> candidate = trace.mmgg;
  for (std::size_t tried = 0; candidate && tried < kMaxMmggAlternatives; ++tried) {
    if (OnlyStaircases(polygon, GuardsOf(trace.grid, *candidate))) {
      trace.mmgg = *candidate;
      stats.mmgg_skipped = tried;
      break;
    }
    candidate = NextOptimalMmgg(grid_graph, *candidate);
  }
  trace.grid_guards = GuardsOf(trace.grid, trace.mmgg);
  stats.grid_guards = trace.grid_guards.size();
  stats.timings.mmgg_ms = clock.Lap();

  trace.critical = CriticalRegions(polygon, trace.grid_guards);
  stats.critical_regions = trace.critical.size();
  stats.timings.critical_ms = clock.Lap();

  trace.critical_graph = BuildCriticalGraph(polygon, trace.critical,
                                            CandidateGuards(polygon, trace.grid));
  trace.cover = MinEdgeCover(trace.critical_graph);
  trace.critical_guards = GuardsFromCover(trace.critical_graph, trace.cover);
  stats.critical_guards = trace.critical_guards.size();
  stats.timings.cover_ms = clock.Lap();

  for (const OrthoSegment& s : trace.grid_guards) {
    out.cameras.push_back(s);
    out.provenance.push_back(Provenance::kGrid);
  }
  for (const OrthoSegment& s : trace.critical_guards) {
    if (std::find(out.cameras.begin(), out.cameras.end(), s) != out.cameras.end()) {
      continue;
    }
    out.cameras.push_back(s);
    out.provenance.push_back(Provenance::kCritical);
  }
  return out;
}

GuardSet SolveMgsc(const OrthoPolygon& polygon, const MgscOptions& options) {
  GuardSet out = SolveMsc(polygon);
  std::vector<OrthoSegment> grid_cams;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out.provenance[i] == Provenance::kGrid) grid_cams.push_back(out.cameras[i]);
  }

  if (grid_cams.size() == 1) {
    if (!options.allow_self_guard) {
      // Two cameras on one track see each other entirely.
      out.cameras.insert(out.cameras.begin() + 1, grid_cams.front());
      out.provenance.insert(out.provenance.begin() + 1, Provenance::kGrid);
    }
  } else {
    for (std::size_t i = 0; i < grid_cams.size(); ++i) {
      bool guarded = false;
      for (std::size_t j = 0; j < grid_cams.size() && !guarded; ++j) {
        guarded = j != i && CameraGuardsCamera(polygon, grid_cams[j], grid_cams[i]);
      }
      if (!guarded) {
        throw Error(ErrorCode::kGuardednessViolation,
                    "grid camera " + ToString(grid_cams[i]) + " is unguarded");
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out.provenance[i] != Provenance::kCritical) continue;
    const bool guarded = std::any_of(
        grid_cams.begin(), grid_cams.end(), [&](const OrthoSegment& g) {
          return CameraGuardsCamera(polygon, g, out.cameras[i]);
        });
    if (!guarded) {
      throw Error(ErrorCode::kGuardednessViolation,
                  "critical camera " + ToString(out.cameras[i]) + " is unguarded");
    }
  }
  return out;
}

}  // namespace slidecam
