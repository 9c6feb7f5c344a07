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

#ifndef SLIDECAM_VISIBILITY_HPP_
#define SLIDECAM_VISIBILITY_HPP_

#include <span>

#include "slidecam/geometry.hpp"
#include "slidecam/region.hpp"

namespace slidecam {

// Region seen by a sliding camera travelling along `camera`: every point p of
// the polygon joined to some point of the camera by a segment perpendicular
// to the camera and contained in the polygon. Regularized like every
// RectilinearRegion. Throws kDegenerateSegment or kSegmentNotInside.
RectilinearRegion CameraVisibility(const OrthoPolygon& polygon,
                                   const OrthoSegment& camera);

// vis(b) is a subset of vis(a).
bool Dominates(const OrthoPolygon& polygon, const OrthoSegment& a,
               const OrthoSegment& b);

bool CoversPolygon(const OrthoPolygon& polygon,
                   std::span<const OrthoSegment> cameras);

// Union of the cameras' visibility regions.
RectilinearRegion JointVisibility(const OrthoPolygon& polygon,
                                  std::span<const OrthoSegment> cameras);

bool GuardsEntirely(const OrthoPolygon& polygon, const OrthoSegment& camera,
                    const RectilinearRegion& target);

// Whether every point of `watched` is seen by the camera on `guard`. Exact on
// the closed polygon, including points on measure-zero pieces of the
// visibility set that the regularized region drops.
bool CameraGuardsCamera(const OrthoPolygon& polygon, const OrthoSegment& guard,
                        const OrthoSegment& watched);

}  // namespace slidecam

#endif  // SLIDECAM_VISIBILITY_HPP_
