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

#ifndef SLIDECAM_IO_HPP_
#define SLIDECAM_IO_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "slidecam/geometry.hpp"

namespace slidecam {

// Polygon file: a line with the vertex count n, then n lines "x y" with
// integer coordinates in counterclockwise order. Blank lines and text after
// '#' are ignored. Malformed text throws kParse; geometric problems throw the
// ValidatePolygon error codes.
OrthoPolygon ParsePolygon(std::string_view text);
OrthoPolygon ReadPolygonFile(const std::string& path);

std::string FormatPolygon(const OrthoPolygon& polygon);

// One camera per line, "H y x_lo x_hi" or "V x y_lo y_hi".
std::string FormatCameras(std::span<const OrthoSegment> cameras);

}  // namespace slidecam

#endif  // SLIDECAM_IO_HPP_
