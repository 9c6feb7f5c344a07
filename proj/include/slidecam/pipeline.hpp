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

#ifndef SLIDECAM_PIPELINE_HPP_
#define SLIDECAM_PIPELINE_HPP_

#include <vector>

#include "slidecam/critical.hpp"
#include "slidecam/geometry.hpp"
#include "slidecam/grid.hpp"
#include "slidecam/mmgg.hpp"

namespace slidecam {

// Which phase contributed a camera.
enum class Provenance { kGrid, kCritical };

struct PhaseTimings {
  double chords_ms = 0;
  double prune_ms = 0;
  double mmgg_ms = 0;
  double critical_ms = 0;
  double cover_ms = 0;
  double total_ms() const {
    return chords_ms + prune_ms + mmgg_ms + critical_ms + cover_ms;
  }
};

struct RunStats {
  std::size_t vertices = 0;
  std::size_t reflex = 0;
  std::size_t chords = 0;            // |L(P)| after merging duplicates
  std::size_t grid_segments = 0;     // |T_G|
  std::size_t grid_guards = 0;       // |S|
  std::size_t critical_regions = 0;  // |R_C|
  std::size_t critical_guards = 0;   // |S_C|
  // Optimal grid solutions passed over because they left a residue that is
  // not a staircase.
  std::size_t mmgg_skipped = 0;
  PhaseTimings timings;
};

// Intermediate results kept for reporting and rendering.
struct PipelineTrace {
  Grid grid;
  MmggSolution mmgg;
  std::vector<OrthoSegment> grid_guards;      // S
  std::vector<CriticalRegion> critical;       // R_C
  CriticalGraph critical_graph;               // H_P
  std::vector<int> cover;                     // edge indices into H_P
  std::vector<OrthoSegment> critical_guards;  // S_C
};

struct GuardSet {
  std::vector<OrthoSegment> cameras;
  std::vector<Provenance> provenance;  // parallel to cameras
  RunStats stats;
  PipelineTrace trace;

  std::size_t size() const { return cameras.size(); }
};

// Optimal grid solutions examined before giving up on a staircase residue.
inline constexpr std::size_t kMaxMmggAlternatives = 256;

// Sliding cameras covering the polygon: an optimal guarded grid solution S
// plus edge-cover guards S_C for the critical regions S leaves unseen. At most
// 7/2 times the optimum. A rectangle gets a single camera on its left edge.
//
// S is the lexicographically smallest optimum whose residue consists of
// staircases. If none of the first kMaxMmggAlternatives optima qualifies the
// smallest one is used and kNonStaircaseResidue is thrown.
GuardSet SolveMsc(const OrthoPolygon& polygon);

struct MgscOptions {
  // Accept a lone grid camera as guarding itself. Off by default: the camera
  // is then doubled on the same track.
  bool allow_self_guard = false;
};

// Same cameras as SolveMsc, checked to form a guarded set (at most 5/2 times
// the guarded optimum). Throws kGuardednessViolation if the check fails.
GuardSet SolveMgsc(const OrthoPolygon& polygon, const MgscOptions& options = {});

}  // namespace slidecam

#endif  // SLIDECAM_PIPELINE_HPP_
