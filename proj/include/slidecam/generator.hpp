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

#ifndef SLIDECAM_GENERATOR_HPP_
#define SLIDECAM_GENERATOR_HPP_

#include <cstdint>

#include "slidecam/geometry.hpp"

namespace slidecam {

struct GeneratorOptions {
  // Cells per side of the aggregation board; 0 picks target_vertices / 2 + 2.
  int board_cells = 0;
  // Each board column and row gets a random width in [1, max_cell_size].
  int max_cell_size = 3;
};

// Deterministic random simple orthogonal polygon with exactly
// `target_vertices` vertices (even, >= 4). Grows and shrinks a simply
// connected, pinch-free union of board cells until its boundary has the
// requested number of corners; the same seed always gives the same polygon.
OrthoPolygon GeneratePolygon(std::uint64_t seed, int target_vertices,
                             const GeneratorOptions& options = {});

}  // namespace slidecam

#endif  // SLIDECAM_GENERATOR_HPP_
