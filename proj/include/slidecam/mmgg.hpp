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

#ifndef SLIDECAM_MMGG_HPP_
#define SLIDECAM_MMGG_HPP_

#include <optional>
#include <vector>

#include "slidecam/graph.hpp"

namespace slidecam {

// A guarded set of grid segments covering the grid, as sorted node indices
// of the intersection graph.
//
// Coverage: every node outside `chosen` has a neighbor in `chosen`.
// Guardedness: every chosen node has a chosen neighbor, except a node that is
// isolated in the whole graph, which guards itself (a camera always sees its
// own track).
struct MmggSolution {
  std::vector<int> chosen;

  std::size_t size() const { return chosen.size(); }
  friend bool operator==(const MmggSolution&, const MmggSolution&) = default;
};

// Largest graph SolveMmggExact accepts.
inline constexpr int kMaxMmggNodes = 128;

// Minimum-cardinality MmggSolution by branch and bound (a minimum total
// dominating set with the self-guard exception for isolated nodes). Among all
// optima the lexicographically smallest index sequence is returned. Throws
// kTooLarge beyond kMaxMmggNodes nodes.
MmggSolution SolveMmggExact(const Graph& graph);

// The next minimum-cardinality solution after `current` (itself optimal) in
// lexicographic order of index sequences, or nullopt after the last one.
std::optional<MmggSolution> NextOptimalMmgg(const Graph& graph,
                                            const MmggSolution& current);

bool VerifyMmgg(const Graph& graph, const MmggSolution& solution);

}  // namespace slidecam

#endif  // SLIDECAM_MMGG_HPP_
