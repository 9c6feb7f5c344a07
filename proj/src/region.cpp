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

#include "slidecam/region.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace slidecam {
namespace {

using Intervals = std::vector<Interval>;

// Sorts, merges touching or overlapping intervals and drops zero-length ones.
Intervals Normalize(Intervals v) {
  std::erase_if(v, [](const Interval& iv) { return iv.lo >= iv.hi; });
  std::sort(v.begin(), v.end());
  Intervals out;
  for (const Interval& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

Intervals Union1D(const Intervals& a, const Intervals& b) {
  Intervals all = a;
  all.insert(all.end(), b.begin(), b.end());
  return Normalize(std::move(all));
}

Intervals Difference1D(const Intervals& a, const Intervals& b) {
  Intervals out;
  for (const Interval& iv : a) {
    Coord cur = iv.lo;
    for (const Interval& cut : b) {
      if (cut.hi <= cur) continue;
      if (cut.lo >= iv.hi) break;
      if (cut.lo > cur) out.push_back({cur, cut.lo});
      cur = std::max(cur, cut.hi);
      if (cur >= iv.hi) break;
    }
    if (cur < iv.hi) out.push_back({cur, iv.hi});
  }
  return Normalize(std::move(out));
}

Intervals Intersection1D(const Intervals& a, const Intervals& b) {
  Intervals out;
  for (const Interval& p : a) {
    for (const Interval& q : b) {
      const Coord lo = std::max(p.lo, q.lo);
      const Coord hi = std::min(p.hi, q.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  }
  return Normalize(std::move(out));
}

// Interval list of the slab covering the elementary band [x0, x1], or empty.
// Band boundaries always include every slab boundary of `slabs`.
const Intervals& SectionAt(const std::vector<RectilinearRegion::Slab>& slabs,
                           Coord x0, Coord x1) {
  static const Intervals kEmpty;
  auto it = std::upper_bound(
      slabs.begin(), slabs.end(), x0,
      [](Coord x, const RectilinearRegion::Slab& s) { return x < s.x0; });
  if (it == slabs.begin()) return kEmpty;
  --it;
  return (it->x0 <= x0 && x1 <= it->x1) ? it->ys : kEmpty;
}

template <typename Op>
std::vector<RectilinearRegion::Slab> Combine(
    const std::vector<RectilinearRegion::Slab>& a,
    const std::vector<RectilinearRegion::Slab>& b, Op op) {
  std::vector<Coord> events;
  for (const auto* side : {&a, &b}) {
    for (const auto& s : *side) {
      events.push_back(s.x0);
      events.push_back(s.x1);
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<RectilinearRegion::Slab> out;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    const Coord x0 = events[i];
    const Coord x1 = events[i + 1];
    Intervals ys = op(SectionAt(a, x0, x1), SectionAt(b, x0, x1));
    if (!ys.empty()) out.push_back({x0, x1, std::move(ys)});
  }
  return out;
}

}  // namespace

RectilinearRegion RectilinearRegion::FromSlabs(std::vector<Slab> slabs) {
  RectilinearRegion region;
  for (Slab& s : slabs) {
    if (s.ys.empty() || s.x0 >= s.x1) continue;
    if (!region.slabs_.empty()) {
      Slab& last = region.slabs_.back();
      if (last.x1 == s.x0 && last.ys == s.ys) {
        last.x1 = s.x1;
        continue;
      }
    }
    region.slabs_.push_back(std::move(s));
  }
  return region;
}

RectilinearRegion RectilinearRegion::FromRects(std::span<const Rect> rects) {
  std::vector<Coord> events;
  for (const Rect& r : rects) {
    if (r.empty()) continue;
    events.push_back(r.x0);
    events.push_back(r.x1);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<Slab> slabs;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    Intervals ys;
    for (const Rect& r : rects) {
      if (!r.empty() && r.x0 <= events[i] && events[i + 1] <= r.x1) {
        ys.push_back({r.y0, r.y1});
      }
    }
    slabs.push_back({events[i], events[i + 1], Normalize(std::move(ys))});
  }
  return FromSlabs(std::move(slabs));
}

RectilinearRegion RectilinearRegion::FromPolygon(const OrthoPolygon& polygon) {
  const std::vector<Coord> xs = VertexCoordinates(polygon, /*x_axis=*/true);
  std::vector<Slab> slabs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    slabs.push_back(
        {xs[i], xs[i + 1], OpenSection(polygon, Orientation::kVertical, xs[i], +1)});
  }
  return FromSlabs(std::move(slabs));
}

std::vector<Rect> RectilinearRegion::rects() const {
  std::vector<Rect> out;
  for (const Slab& s : slabs_) {
    for (const Interval& iv : s.ys) out.push_back({s.x0, s.x1, iv.lo, iv.hi});
  }
  return out;
}

Coord RectilinearRegion::area() const {
  Coord total = 0;
  for (const Slab& s : slabs_) {
    for (const Interval& iv : s.ys) total += (s.x1 - s.x0) * iv.length();
  }
  return total;
}

Rect RectilinearRegion::bounding_box() const {
  if (slabs_.empty()) return {};
  Rect box{slabs_.front().x0, slabs_.back().x1, slabs_.front().ys.front().lo,
           slabs_.front().ys.back().hi};
  for (const Slab& s : slabs_) {
    box.y0 = std::min(box.y0, s.ys.front().lo);
    box.y1 = std::max(box.y1, s.ys.back().hi);
  }
  return box;
}

bool RectilinearRegion::Covers(const Rect& r) const {
  if (r.empty()) return true;
  Coord cur = r.x0;
  for (const Slab& s : slabs_) {
    if (s.x1 <= cur) continue;
    if (s.x0 > cur) return false;
    const bool spans = std::any_of(s.ys.begin(), s.ys.end(), [&](const Interval& iv) {
      return iv.lo <= r.y0 && r.y1 <= iv.hi;
    });
    if (!spans) return false;
    cur = s.x1;
    if (cur >= r.x1) return true;
  }
  return false;
}

RectilinearRegion RegionUnion(const RectilinearRegion& a,
                              const RectilinearRegion& b) {
  return RectilinearRegion::FromSlabs(Combine(a.slabs_, b.slabs_, Union1D));
}

RectilinearRegion RegionDifference(const RectilinearRegion& a,
                                   const RectilinearRegion& b) {
  return RectilinearRegion::FromSlabs(Combine(a.slabs_, b.slabs_, Difference1D));
}

RectilinearRegion RegionIntersection(const RectilinearRegion& a,
                                     const RectilinearRegion& b) {
  return RectilinearRegion::FromSlabs(
      Combine(a.slabs_, b.slabs_, Intersection1D));
}

bool RegionContains(const RectilinearRegion& a, const RectilinearRegion& b) {
  return RegionDifference(b, a).empty();
}

std::vector<RectilinearRegion> RegionComponents(const RectilinearRegion& a) {
  const auto& slabs = a.slabs();
  std::vector<Rect> rects;
  std::vector<std::size_t> first_rect(slabs.size() + 1, 0);
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    first_rect[i] = rects.size();
    for (const Interval& iv : slabs[i].ys) {
      rects.push_back({slabs[i].x0, slabs[i].x1, iv.lo, iv.hi});
    }
  }
  first_rect[slabs.size()] = rects.size();

  std::vector<std::size_t> parent(rects.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i + 1 < slabs.size(); ++i) {
    if (slabs[i].x1 != slabs[i + 1].x0) continue;
    for (std::size_t p = first_rect[i]; p < first_rect[i + 1]; ++p) {
      for (std::size_t q = first_rect[i + 1]; q < first_rect[i + 2]; ++q) {
        if (std::min(rects[p].y1, rects[q].y1) >
            std::max(rects[p].y0, rects[q].y0)) {
          parent[find(p)] = find(q);
        }
      }
    }
  }

  std::vector<std::vector<Rect>> groups;
  std::vector<std::ptrdiff_t> group_of(rects.size(), -1);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const std::size_t root = find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<std::ptrdiff_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[root])].push_back(rects[i]);
  }
  std::vector<RectilinearRegion> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(RectilinearRegion::FromRects(g));
  return out;
}

}  // namespace slidecam
