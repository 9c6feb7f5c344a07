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

#include "slidecam/svg.hpp"

#include <sstream>

namespace slidecam {
namespace {

constexpr Coord kScale = 24;
constexpr Coord kMargin = 16;

class Canvas {
 public:
  explicit Canvas(const OrthoPolygon& polygon)
      : x0_(polygon.x_range().lo), y1_(polygon.y_range().hi) {}

  Coord X(Coord x) const { return kMargin + (x - x0_) * kScale; }
  Coord Y(Coord y) const { return kMargin + (y1_ - y) * kScale; }

 private:
  Coord x0_;
  Coord y1_;
};

void Line(std::ostream& os, const Canvas& c, const OrthoSegment& s,
          const char* style) {
  const Point a = s.first();
  const Point b = s.second();
  os << "  <line x1=\"" << c.X(a.x) << "\" y1=\"" << c.Y(a.y) << "\" x2=\""
     << c.X(b.x) << "\" y2=\"" << c.Y(b.y) << "\" " << style << "/>\n";
}

}  // namespace

std::string RenderSvg(const OrthoPolygon& polygon, const GuardSet& solution) {
  const Canvas canvas(polygon);
  const Interval xr = polygon.x_range();
  const Interval yr = polygon.y_range();
  const Coord width = 2 * kMargin + xr.length() * kScale;
  const Coord height = 2 * kMargin + yr.length() * kScale;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "  <defs>\n"
        "    <pattern id=\"hatch\" width=\"6\" height=\"6\" "
        "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">\n"
        "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" "
        "stroke-width=\"1.5\"/>\n"
        "    </pattern>\n"
        "  </defs>\n";

  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon.vertex(i);
    os << (i ? " " : "") << canvas.X(p.x) << ',' << canvas.Y(p.y);
  }
  os << "\" fill=\"#f4f4f4\" stroke=\"#1f3f9f\" stroke-width=\"2\"/>\n";

  for (const CriticalRegion& r : solution.trace.critical) {
    for (const Rect& rect : r.region.rects()) {
      os << "  <rect x=\"" << canvas.X(rect.x0) << "\" y=\"" << canvas.Y(rect.y1)
         << "\" width=\"" << (rect.x1 - rect.x0) * kScale << "\" height=\""
         << (rect.y1 - rect.y0) * kScale
         << "\" fill=\"url(#hatch)\" stroke=\"none\"/>\n";
    }
  }
  for (const OrthoSegment& s : solution.trace.grid.segments) {
    Line(os, canvas, s, "stroke=\"#bbb\" stroke-width=\"1\"");
  }
  for (std::size_t i = 0; i < solution.size(); ++i) {
    const bool grid = solution.provenance[i] == Provenance::kGrid;
    Line(os, canvas, solution.cameras[i],
         grid ? "stroke=\"#d62728\" stroke-width=\"3\""
              : "stroke=\"#1f77b4\" stroke-width=\"3\" stroke-dasharray=\"8 5\"");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace slidecam
