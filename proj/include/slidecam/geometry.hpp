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

#ifndef SLIDECAM_GEOMETRY_HPP_
#define SLIDECAM_GEOMETRY_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace slidecam {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation : std::uint8_t { kHorizontal = 0, kVertical = 1 };

constexpr Orientation Perpendicular(Orientation o) {
  return o == Orientation::kHorizontal ? Orientation::kVertical
                                       : Orientation::kHorizontal;
}

// Closed interval [lo, hi] on one axis.
struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  bool Contains(Coord c) const { return lo <= c && c <= hi; }
  bool Contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  Coord length() const { return hi - lo; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Axis-parallel segment. A horizontal segment lies on y = anchor and spans
// x in [lo, hi]; a vertical one lies on x = anchor and spans y in [lo, hi].
// The defaulted ordering is (orientation, anchor, lo, hi), horizontal first.
struct OrthoSegment {
  Orientation orientation = Orientation::kHorizontal;
  Coord anchor = 0;
  Coord lo = 0;
  Coord hi = 0;

  static OrthoSegment Horizontal(Coord y, Coord x_lo, Coord x_hi) {
    return {Orientation::kHorizontal, y, x_lo, x_hi};
  }
  static OrthoSegment Vertical(Coord x, Coord y_lo, Coord y_hi) {
    return {Orientation::kVertical, x, y_lo, y_hi};
  }

  bool horizontal() const { return orientation == Orientation::kHorizontal; }
  bool degenerate() const { return lo == hi; }
  Interval span() const { return {lo, hi}; }
  Point first() const;
  Point second() const;
  bool Contains(const Point& p) const;

  friend auto operator<=>(const OrthoSegment&, const OrthoSegment&) = default;
};

bool Intersects(const OrthoSegment& a, const OrthoSegment& b);

// "H y x_lo x_hi" or "V x y_lo y_hi".
std::string ToString(const OrthoSegment& s);
std::ostream& operator<<(std::ostream& os, const OrthoSegment& s);
std::ostream& operator<<(std::ostream& os, const Point& p);

// A closed, simple, rectilinear polygon with integer vertices stored in
// counterclockwise order without collinear vertices. Instances can only be
// obtained through ValidatePolygon.
class OrthoPolygon {
 public:
  OrthoPolygon() = default;

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % size()]; }
  // Edge i runs from vertex(i) to vertex(i + 1).
  OrthoSegment edge(std::size_t i) const;
  Interval x_range() const;
  Interval y_range() const;
  // Twice the signed area; positive for counterclockwise order.
  Coord twice_area() const;

  // Multiplies every coordinate by `factor` (> 0). Used to reach half-integer
  // sample points with integer arithmetic.
  OrthoPolygon Scaled(Coord factor) const;

  friend bool operator==(const OrthoPolygon&, const OrthoPolygon&) = default;

 private:
  friend OrthoPolygon ValidatePolygon(std::span<const Point>, bool);
  std::vector<Point> vertices_;
};

// Checks orthogonality and simplicity and returns the polygon in
// counterclockwise order. A trailing copy of the first vertex is accepted.
// Collinear redundant vertices (and repeated consecutive vertices) are
// removed when `normalize_collinear` is set, otherwise they are rejected.
OrthoPolygon ValidatePolygon(std::span<const Point> vertices,
                             bool normalize_collinear = true);

// Vertices with a 270 degree interior angle, in polygon order.
std::vector<Point> ReflexVertices(const OrthoPolygon& polygon);

enum class Location { kInterior, kBoundary, kOutside };

Location ContainsPoint(const OrthoPolygon& polygon, const Point& p);

// Maximal segment of the given orientation through p inside the closed
// polygon. Throws kPointOutside if p is not in the polygon.
OrthoSegment MaxChord(const OrthoPolygon& polygon, const Point& p,
                      Orientation orientation);

// Cross sections of the closed polygon with lines of `orientation`.
//
// LineSection: the line at the given coordinate (y for horizontal lines, x for
// vertical ones). Intervals are closed, sorted and pairwise disjoint.
std::vector<Interval> LineSection(const OrthoPolygon& polygon,
                                  Orientation orientation, Coord at);
// OpenSection: the line at `at + side * eps` for an infinitesimal eps, with
// side = +1 or -1. Equals the section of every line in the open band between
// `at` and the next vertex coordinate on that side.
std::vector<Interval> OpenSection(const OrthoPolygon& polygon,
                                  Orientation orientation, Coord at, int side);

// Sorted distinct x (or y) coordinates of the polygon's vertices.
std::vector<Coord> VertexCoordinates(const OrthoPolygon& polygon, bool x_axis);

}  // namespace slidecam

#endif  // SLIDECAM_GEOMETRY_HPP_
