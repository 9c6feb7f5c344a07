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

#include "slidecam/mmgg.hpp"

#include <algorithm>
#include <bitset>
#include <optional>
#include <string>

#include "slidecam/error.hpp"

namespace slidecam {
namespace {

using Mask = std::bitset<kMaxMmggNodes>;

Mask Later(int n, int after) {
  Mask m;
  for (int y = after + 1; y < n; ++y) m.set(y);
  return m;
}

class TotalDominationSearch {
 public:
  explicit TotalDominationSearch(const Graph& graph) : n_(graph.node_count()) {
    closed_.resize(n_);
    open_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      for (int w : graph.neighbors(v)) open_[v].set(w);
      closed_[v] = open_[v];
      closed_[v].set(v);
      if (graph.isolated(v)) isolated_.set(v);
      all_.set(v);
    }
  }

  const Mask& all() const { return all_; }

  // Whether `chosen` extends to a solution using at most `budget` more nodes
  // drawn from `allowed`.
  bool Feasible(const Mask& chosen, Mask allowed, int budget) const {
    Mask uncovered;
    int best_count = kMaxMmggNodes + 1;
    Mask best_candidates;
    for (int v = 0; v < n_; ++v) {
      const bool covered = (closed_[v] & chosen).any();
      const bool needs_guard =
          chosen.test(v) && !isolated_.test(v) && (open_[v] & chosen).none();
      if (!covered) uncovered.set(v);
      if (covered && !needs_guard) continue;
      // An unmet requirement; some node in its candidate set must be added.
      const Mask candidates = (covered ? open_[v] : closed_[v]) & allowed;
      const int count = static_cast<int>(candidates.count());
      if (count < best_count) {
        best_count = count;
        best_candidates = candidates;
      }
    }
    if (best_count > kMaxMmggNodes) return true;  // nothing unmet
    if (budget == 0 || best_count == 0) return false;

    // Each added node covers at most its closed neighborhood.
    std::size_t max_gain = 0;
    for (int x = 0; x < n_; ++x) {
      if (allowed.test(x)) {
        max_gain = std::max(max_gain, (closed_[x] & uncovered).count());
      }
    }
    const std::size_t pending = uncovered.count();
    if (pending > 0 &&
        (max_gain == 0 ||
         (pending + max_gain - 1) / max_gain > static_cast<std::size_t>(budget))) {
      return false;
    }

    for (int x = 0; x < n_; ++x) {
      if (!best_candidates.test(x)) continue;
      allowed.reset(x);
      Mask next = chosen;
      next.set(x);
      if (Feasible(next, allowed, budget - 1)) return true;
      // Completions containing x were all explored above.
    }
    return false;
  }

 private:
  int n_;
  std::vector<Mask> closed_;
  std::vector<Mask> open_;
  Mask isolated_;
  Mask all_;
};

// Lexicographically smallest solution of exactly `size` nodes that starts
// with the sorted `prefix`, filled position by position.
bool CompleteSmallest(const TotalDominationSearch& search, int n,
                      const std::vector<int>& prefix, int size,
                      MmggSolution& out) {
  Mask chosen;
  for (int v : prefix) chosen.set(v);
  out.chosen = prefix;
  int last = prefix.empty() ? -1 : prefix.back();
  if (!search.Feasible(chosen, Later(n, last), size - static_cast<int>(prefix.size()))) {
    return false;
  }
  while (static_cast<int>(out.size()) < size) {
    bool extended = false;
    for (int x = last + 1; x < n && !extended; ++x) {
      Mask next = chosen;
      next.set(x);
      const int remaining = size - static_cast<int>(out.size()) - 1;
      if (search.Feasible(next, Later(n, x), remaining)) {
        chosen = next;
        out.chosen.push_back(x);
        last = x;
        extended = true;
      }
    }
    if (!extended) return false;
  }
  return true;
}

}  // namespace

MmggSolution SolveMmggExact(const Graph& graph) {
  const int n = graph.node_count();
  if (n > kMaxMmggNodes) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " nodes exceeds the exact solver limit");
  }
  if (n == 0) return {};

  const TotalDominationSearch search(graph);
  int optimum = 1;
  while (!search.Feasible(Mask(), search.all(), optimum)) {
    if (++optimum > n) throw Error(ErrorCode::kInfeasible, "no guarded cover");
  }

  MmggSolution solution;
  if (!CompleteSmallest(search, n, {}, optimum, solution)) {
    throw Error(ErrorCode::kInfeasible, "lexicographic pass failed");
  }
  return solution;
}

std::optional<MmggSolution> NextOptimalMmgg(const Graph& graph,
                                            const MmggSolution& current) {
  const int n = graph.node_count();
  if (n > kMaxMmggNodes) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " nodes exceeds the exact solver limit");
  }
  const TotalDominationSearch search(graph);
  const int k = static_cast<int>(current.size());
  // Keep the longest prefix that still has a larger completion.
  for (int p = k - 1; p >= 0; --p) {
    std::vector<int> prefix(current.chosen.begin(), current.chosen.begin() + p);
    for (int x = current.chosen[p] + 1; x < n; ++x) {
      std::vector<int> trial = prefix;
      trial.push_back(x);
      MmggSolution next;
      if (CompleteSmallest(search, n, trial, k, next)) return next;
    }
  }
  return std::nullopt;
}

bool VerifyMmgg(const Graph& graph, const MmggSolution& solution) {
  const int n = graph.node_count();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : solution.chosen) {
    if (v < 0 || v >= n || in[v]) return false;
    in[v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    const auto& nb = graph.neighbors(v);
    const bool has_chosen_neighbor =
        std::any_of(nb.begin(), nb.end(), [&](int w) { return in[w] != 0; });
    if (in[v]) {
      if (!graph.isolated(v) && !has_chosen_neighbor) return false;
    } else if (!has_chosen_neighbor) {
      return false;
    }
  }
  return true;
}

}  // namespace slidecam
