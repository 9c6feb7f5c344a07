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

#ifndef SLIDECAM_SVG_HPP_
#define SLIDECAM_SVG_HPP_

#include <string>

#include "slidecam/geometry.hpp"
#include "slidecam/pipeline.hpp"

namespace slidecam {

// Static drawing of a solved instance: polygon outline, grid segments in a
// faint stroke, grid guards solid, critical-region guards dashed and critical
// regions hatched. Output depends only on the inputs.
std::string RenderSvg(const OrthoPolygon& polygon, const GuardSet& solution);

}  // namespace slidecam

#endif  // SLIDECAM_SVG_HPP_
