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

#ifndef SLIDECAM_REGION_HPP_
#define SLIDECAM_REGION_HPP_

#include <span>
#include <vector>

#include "slidecam/geometry.hpp"

namespace slidecam {

// Closed axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
  Coord x0 = 0;
  Coord x1 = 0;
  Coord y0 = 0;
  Coord y1 = 0;

  bool empty() const { return x0 >= x1 || y0 >= y1; }
  Coord area() const { return empty() ? 0 : (x1 - x0) * (y1 - y0); }

  friend auto operator<=>(const Rect&, const Rect&) = default;
};

// A finite union of closed rectangles, regularized (the closure of its
// interior, so segments and isolated points are never represented).
//
// The canonical form is a sequence of vertical slabs [x0, x1] with strictly
// increasing, non-overlapping x ranges. Each slab holds sorted, pairwise
// separated y intervals, and two slabs that touch always have different
// interval lists. Equal point sets therefore have identical representations,
// so operator== is region equality.
class RectilinearRegion {
 public:
  struct Slab {
    Coord x0 = 0;
    Coord x1 = 0;
    std::vector<Interval> ys;

    friend bool operator==(const Slab&, const Slab&) = default;
  };

  RectilinearRegion() = default;

  static RectilinearRegion FromRects(std::span<const Rect> rects);
  static RectilinearRegion FromRect(const Rect& r) {
    return FromRects(std::span<const Rect>(&r, 1));
  }
  static RectilinearRegion FromPolygon(const OrthoPolygon& polygon);

  bool empty() const { return slabs_.empty(); }
  const std::vector<Slab>& slabs() const { return slabs_; }
  // One rectangle per (slab, interval), sorted by (x0, y0).
  std::vector<Rect> rects() const;
  Coord area() const;
  Rect bounding_box() const;

  // Whether the closed rectangle lies inside the region.
  bool Covers(const Rect& r) const;

  friend bool operator==(const RectilinearRegion&,
                         const RectilinearRegion&) = default;

 private:
  friend RectilinearRegion RegionUnion(const RectilinearRegion&,
                                       const RectilinearRegion&);
  friend RectilinearRegion RegionDifference(const RectilinearRegion&,
                                            const RectilinearRegion&);
  friend RectilinearRegion RegionIntersection(const RectilinearRegion&,
                                              const RectilinearRegion&);
  // Merges touching slabs with equal interval lists and drops empty slabs.
  static RectilinearRegion FromSlabs(std::vector<Slab> slabs);

  std::vector<Slab> slabs_;
};

RectilinearRegion RegionUnion(const RectilinearRegion& a,
                              const RectilinearRegion& b);
// Closure of a \ b. Empty exactly when a is contained in b.
RectilinearRegion RegionDifference(const RectilinearRegion& a,
                                   const RectilinearRegion& b);
RectilinearRegion RegionIntersection(const RectilinearRegion& a,
                                     const RectilinearRegion& b);
// Whether b is a subset of a.
bool RegionContains(const RectilinearRegion& a, const RectilinearRegion& b);
// Maximal unions of rectangles connected through shared edges of positive
// length. Corner contact does not connect. Ordered by their first rectangle.
std::vector<RectilinearRegion> RegionComponents(const RectilinearRegion& a);

}  // namespace slidecam

#endif  // SLIDECAM_REGION_HPP_
