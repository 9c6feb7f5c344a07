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

#include "slidecam/visibility.hpp"

#include <algorithm>
#include <vector>

#include "slidecam/error.hpp"

namespace slidecam {
namespace {

Point At(Orientation o, Coord moving, Coord fixed) {
  return o == Orientation::kHorizontal ? Point{moving, fixed}
                                       : Point{fixed, moving};
}

void CheckInside(const OrthoPolygon& polygon, const OrthoSegment& s) {
  if (s.lo > s.hi) {
    throw Error(ErrorCode::kSegmentNotInside, "reversed span " + ToString(s));
  }
  try {
    const OrthoSegment chord = MaxChord(polygon, s.first(), s.orientation);
    if (chord.span().Contains(s.span())) return;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPointOutside) throw;
  }
  throw Error(ErrorCode::kSegmentNotInside, ToString(s));
}

// Event coordinates along the camera: its endpoints plus every vertex
// coordinate strictly inside its span.
std::vector<Coord> Events(const OrthoPolygon& polygon, const OrthoSegment& s) {
  std::vector<Coord> events{s.lo, s.hi};
  for (Coord c : VertexCoordinates(polygon, s.horizontal())) {
    if (s.lo < c && c < s.hi) events.push_back(c);
  }
  std::sort(events.begin(), events.end());
  return events;
}

const Interval* IntervalContaining(const std::vector<Interval>& ivs, Coord c) {
  for (const Interval& iv : ivs) {
    if (iv.Contains(c)) return &iv;
  }
  return nullptr;
}

}  // namespace

RectilinearRegion CameraVisibility(const OrthoPolygon& polygon,
                                   const OrthoSegment& camera) {
  if (camera.degenerate()) {
    throw Error(ErrorCode::kDegenerateSegment, ToString(camera));
  }
  CheckInside(polygon, camera);

  const Orientation across = Perpendicular(camera.orientation);
  const std::vector<Coord> events = Events(polygon, camera);
  std::vector<Rect> rects;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    const auto section = OpenSection(polygon, across, events[i], +1);
    const Interval* chord = IntervalContaining(section, camera.anchor);
    if (chord == nullptr) {
      throw Error(ErrorCode::kSegmentNotInside, ToString(camera));
    }
    if (camera.horizontal()) {
      rects.push_back({events[i], events[i + 1], chord->lo, chord->hi});
    } else {
      rects.push_back({chord->lo, chord->hi, events[i], events[i + 1]});
    }
  }
  return RectilinearRegion::FromRects(rects);
}

bool Dominates(const OrthoPolygon& polygon, const OrthoSegment& a,
               const OrthoSegment& b) {
  return RegionContains(CameraVisibility(polygon, a),
                        CameraVisibility(polygon, b));
}

RectilinearRegion JointVisibility(const OrthoPolygon& polygon,
                                  std::span<const OrthoSegment> cameras) {
  RectilinearRegion seen;
  for (const OrthoSegment& c : cameras) {
    seen = RegionUnion(seen, CameraVisibility(polygon, c));
  }
  return seen;
}

bool CoversPolygon(const OrthoPolygon& polygon,
                   std::span<const OrthoSegment> cameras) {
  return RegionDifference(RectilinearRegion::FromPolygon(polygon),
                          JointVisibility(polygon, cameras))
      .empty();
}

bool GuardsEntirely(const OrthoPolygon& polygon, const OrthoSegment& camera,
                    const RectilinearRegion& target) {
  if (target.empty()) return true;
  return RegionContains(CameraVisibility(polygon, camera), target);
}

bool CameraGuardsCamera(const OrthoPolygon& polygon, const OrthoSegment& guard,
                        const OrthoSegment& watched) {
  CheckInside(polygon, guard);
  CheckInside(polygon, watched);
  const Orientation across = Perpendicular(guard.orientation);

  if (watched.orientation != guard.orientation) {
    // Every point of `watched` must share the perpendicular chord through the
    // crossing point of the two supporting lines.
    if (!guard.span().Contains(watched.anchor)) return false;
    const OrthoSegment chord =
        MaxChord(polygon, At(guard.orientation, watched.anchor, guard.anchor),
                 across);
    return chord.span().Contains(watched.span());
  }

  if (!guard.span().Contains(watched.span())) return false;
  if (watched.anchor == guard.anchor) return true;
  // The perpendicular chord through each point of the guard must reach the
  // watched line. Chords are constant between vertex coordinates, so check
  // every event coordinate and one representative of every open band.
  std::vector<Coord> events{watched.lo, watched.hi};
  for (Coord c : VertexCoordinates(polygon, guard.horizontal())) {
    if (watched.lo < c && c < watched.hi) events.push_back(c);
  }
  std::sort(events.begin(), events.end());
  for (std::size_t i = 0; i < events.size(); ++i) {
    const OrthoSegment chord =
        MaxChord(polygon, At(guard.orientation, events[i], guard.anchor), across);
    if (!chord.span().Contains(watched.anchor)) return false;
    if (i + 1 < events.size()) {
      const auto section = OpenSection(polygon, across, events[i], +1);
      const Interval* band = IntervalContaining(section, guard.anchor);
      if (band == nullptr || !band->Contains(watched.anchor)) return false;
    }
  }
  return true;
}

}  // namespace slidecam
