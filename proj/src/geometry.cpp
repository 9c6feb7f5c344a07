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

#include "slidecam/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "slidecam/error.hpp"

namespace slidecam {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonOrthogonalEdge: return "NonOrthogonalEdge";
    case ErrorCode::kSelfIntersecting: return "SelfIntersecting";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kCollinearRedundantVertex: return "CollinearRedundantVertex";
    case ErrorCode::kPointOutside: return "PointOutside";
    case ErrorCode::kSegmentNotInside: return "SegmentNotInside";
    case ErrorCode::kDegenerateSegment: return "DegenerateSegment";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNonStaircaseResidue: return "NonStaircaseResidue";
    case ErrorCode::kUnguardableRegion: return "UnguardableRegion";
    case ErrorCode::kUncoverableVertex: return "UncoverableVertex";
    case ErrorCode::kGuardednessViolation: return "GuardednessViolation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Point OrthoSegment::first() const {
  return horizontal() ? Point{lo, anchor} : Point{anchor, lo};
}

Point OrthoSegment::second() const {
  return horizontal() ? Point{hi, anchor} : Point{anchor, hi};
}

bool OrthoSegment::Contains(const Point& p) const {
  return horizontal() ? (p.y == anchor && lo <= p.x && p.x <= hi)
                      : (p.x == anchor && lo <= p.y && p.y <= hi);
}

bool Intersects(const OrthoSegment& a, const OrthoSegment& b) {
  if (a.orientation == b.orientation) {
    return a.anchor == b.anchor && a.lo <= b.hi && b.lo <= a.hi;
  }
  return a.span().Contains(b.anchor) && b.span().Contains(a.anchor);
}

std::string ToString(const OrthoSegment& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OrthoSegment& s) {
  return os << (s.horizontal() ? 'H' : 'V') << ' ' << s.anchor << ' ' << s.lo
            << ' ' << s.hi;
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

namespace {

OrthoSegment SegmentBetween(const Point& a, const Point& b) {
  if (a.y == b.y) {
    return OrthoSegment::Horizontal(a.y, std::min(a.x, b.x), std::max(a.x, b.x));
  }
  return OrthoSegment::Vertical(a.x, std::min(a.y, b.y), std::max(a.y, b.y));
}

// Sign of the direction of travel along an axis-parallel edge a -> b.
int Direction(const Point& a, const Point& b) {
  const Coord d = (a.x == b.x) ? b.y - a.y : b.x - a.x;
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

Coord TwiceSignedArea(const std::vector<Point>& v) {
  Coord sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

std::string Describe(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

OrthoSegment OrthoPolygon::edge(std::size_t i) const {
  return SegmentBetween(vertex(i), vertex(i + 1));
}

Interval OrthoPolygon::x_range() const {
  auto [lo, hi] = std::minmax_element(
      vertices_.begin(), vertices_.end(),
      [](const Point& a, const Point& b) { return a.x < b.x; });
  return {lo->x, hi->x};
}

Interval OrthoPolygon::y_range() const {
  auto [lo, hi] = std::minmax_element(
      vertices_.begin(), vertices_.end(),
      [](const Point& a, const Point& b) { return a.y < b.y; });
  return {lo->y, hi->y};
}

Coord OrthoPolygon::twice_area() const { return TwiceSignedArea(vertices_); }

OrthoPolygon OrthoPolygon::Scaled(Coord factor) const {
  OrthoPolygon out = *this;
  for (Point& p : out.vertices_) {
    p.x *= factor;
    p.y *= factor;
  }
  return out;
}

OrthoPolygon ValidatePolygon(std::span<const Point> input,
                             bool normalize_collinear) {
  std::vector<Point> v(input.begin(), input.end());
  if (v.size() >= 2 && v.front() == v.back()) v.pop_back();

  for (std::size_t i = 0; i < v.size() && v.size() >= 2; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if (a.x != b.x && a.y != b.y) {
      throw Error(ErrorCode::kNonOrthogonalEdge,
                  "edge " + Describe(a) + " -> " + Describe(b));
    }
  }

  // Repeated consecutive vertices and straight-through vertices carry no
  // geometry; a reversal (spike) is a self-intersection.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& prev = v[(i + v.size() - 1) % v.size()];
      const Point& cur = v[i];
      const Point& next = v[(i + 1) % v.size()];
      bool redundant = false;
      if (prev == cur) {
        redundant = true;
      } else if ((prev.x == cur.x && cur.x == next.x) ||
                 (prev.y == cur.y && cur.y == next.y)) {
        if (cur != next && Direction(prev, cur) != Direction(cur, next)) {
          throw Error(ErrorCode::kSelfIntersecting,
                      "boundary doubles back at " + Describe(cur));
        }
        redundant = true;
      }
      if (redundant) {
        if (!normalize_collinear) {
          throw Error(ErrorCode::kCollinearRedundantVertex, Describe(cur));
        }
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  if (v.size() < 4) {
    throw Error(ErrorCode::kNotClosed,
                "need at least 4 vertices, got " + std::to_string(v.size()));
  }

  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const OrthoSegment ei = SegmentBetween(v[i], v[(i + 1) % n]);
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      const OrthoSegment ej = SegmentBetween(v[j], v[(j + 1) % n]);
      if (Intersects(ei, ej)) {
        throw Error(ErrorCode::kSelfIntersecting,
                    "edges " + ToString(ei) + " and " + ToString(ej));
      }
    }
  }

  const Coord area = TwiceSignedArea(v);
  if (area == 0) throw Error(ErrorCode::kSelfIntersecting, "zero area");
  if (area < 0) std::reverse(v.begin(), v.end());

  OrthoPolygon polygon;
  polygon.vertices_ = std::move(v);
  return polygon;
}

std::vector<Point> ReflexVertices(const OrthoPolygon& polygon) {
  std::vector<Point> reflex;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon.vertex(i + n - 1);
    const Point& b = polygon.vertex(i);
    const Point& c = polygon.vertex(i + 1);
    const Coord cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (cross < 0) reflex.push_back(b);  // right turn on a CCW boundary
  }
  return reflex;
}

Location ContainsPoint(const OrthoPolygon& polygon, const Point& p) {
  bool inside = false;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const OrthoSegment e = polygon.edge(i);
    if (e.Contains(p)) return Location::kBoundary;
    // Half-open rule on y for a ray towards +x.
    if (!e.horizontal() && e.anchor > p.x && e.lo <= p.y && p.y < e.hi) {
      inside = !inside;
    }
  }
  return inside ? Location::kInterior : Location::kOutside;
}

std::vector<Interval> OpenSection(const OrthoPolygon& polygon,
                                  Orientation orientation, Coord at,
                                  int side) {
  // Edges perpendicular to the line bound its intersection with the polygon.
  std::vector<Coord> crossings;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const OrthoSegment e = polygon.edge(i);
    if (e.orientation == orientation) continue;
    const bool crosses = side > 0 ? (e.lo <= at && at < e.hi)
                                  : (e.lo < at && at <= e.hi);
    if (crosses) crossings.push_back(e.anchor);
  }
  std::sort(crossings.begin(), crossings.end());
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < crossings.size(); i += 2) {
    out.push_back({crossings[i], crossings[i + 1]});
  }
  return out;
}

std::vector<Interval> LineSection(const OrthoPolygon& polygon,
                                  Orientation orientation, Coord at) {
  std::vector<Interval> parts = OpenSection(polygon, orientation, at, -1);
  std::vector<Interval> above = OpenSection(polygon, orientation, at, +1);
  parts.insert(parts.end(), above.begin(), above.end());
  std::sort(parts.begin(), parts.end());
  std::vector<Interval> merged;
  for (const Interval& iv : parts) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

OrthoSegment MaxChord(const OrthoPolygon& polygon, const Point& p,
                      Orientation orientation) {
  const bool horizontal = orientation == Orientation::kHorizontal;
  const Coord fixed = horizontal ? p.y : p.x;
  const Coord moving = horizontal ? p.x : p.y;
  for (const Interval& iv : LineSection(polygon, orientation, fixed)) {
    if (iv.Contains(moving)) return {orientation, fixed, iv.lo, iv.hi};
  }
  throw Error(ErrorCode::kPointOutside, Describe(p));
}

std::vector<Coord> VertexCoordinates(const OrthoPolygon& polygon, bool x_axis) {
  std::vector<Coord> out;
  out.reserve(polygon.size());
  for (const Point& p : polygon.vertices()) out.push_back(x_axis ? p.x : p.y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace slidecam
