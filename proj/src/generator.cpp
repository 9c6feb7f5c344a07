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

#include "slidecam/generator.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidecam {
namespace {

class CellBoard {
 public:
  explicit CellBoard(int size)
      : size_(size), filled_(static_cast<std::size_t>(size * size), 0) {}

  int size() const { return size_; }
  bool at(int i, int j) const {
    return i >= 0 && j >= 0 && i < size_ && j < size_ &&
           filled_[static_cast<std::size_t>(j * size_ + i)] != 0;
  }
  void set(int i, int j, bool v) {
    filled_[static_cast<std::size_t>(j * size_ + i)] = v ? 1 : 0;
    count_ += v ? 1 : -1;
  }
  int count() const { return count_; }

  // Corner count of the boundary, or -1 when two cells meet only diagonally.
  int Corners() const {
    int corners = 0;
    for (int j = 0; j <= size_; ++j) {
      for (int i = 0; i <= size_; ++i) {
        const bool a = at(i - 1, j - 1), b = at(i, j - 1);
        const bool c = at(i - 1, j), d = at(i, j);
        const int k = a + b + c + d;
        if (k == 2 && a == d) return -1;
        if (k == 1 || k == 3) ++corners;
      }
    }
    return corners;
  }

  // Filled cells 4-connected and the empty cells 4-connected to the outside.
  bool SimplyConnected() const {
    if (count_ == 0) return false;
    return Reachable(true) == count_ &&
           Reachable(false) == (size_ + 2) * (size_ + 2) - count_;
  }

 private:
  // Flood fill on the board padded by one empty ring.
  int Reachable(bool filled) const {
    const int w = size_ + 2;
    std::vector<char> seen(static_cast<std::size_t>(w * w), 0);
    std::vector<std::pair<int, int>> stack;
    if (filled) {
      for (int j = 0; j < size_ && stack.empty(); ++j) {
        for (int i = 0; i < size_ && stack.empty(); ++i) {
          if (at(i, j)) stack.emplace_back(i, j);
        }
      }
    } else {
      stack.emplace_back(-1, -1);
    }
    int reached = 0;
    auto mark = [&](int i, int j) -> bool {
      if (i < -1 || j < -1 || i > size_ || j > size_) return false;
      if (at(i, j) != filled) return false;
      char& s = seen[static_cast<std::size_t>((j + 1) * w + (i + 1))];
      if (s) return false;
      s = 1;
      return true;
    };
    if (!stack.empty()) mark(stack[0].first, stack[0].second);
    while (!stack.empty()) {
      auto [i, j] = stack.back();
      stack.pop_back();
      ++reached;
      const int di[] = {1, -1, 0, 0};
      const int dj[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        if (mark(i + di[k], j + dj[k])) stack.emplace_back(i + di[k], j + dj[k]);
      }
    }
    return reached;
  }

  int size_;
  std::vector<char> filled_;
  int count_ = 0;
};

std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

OrthoPolygon Trace(const CellBoard& board, const std::vector<Coord>& xs,
                   const std::vector<Coord>& ys) {
  // Counterclockwise boundary edges keyed by their start corner; unique because
  // the board is pinch-free.
  std::map<std::pair<int, int>, std::pair<int, int>> next;
  for (int j = 0; j < board.size(); ++j) {
    for (int i = 0; i < board.size(); ++i) {
      if (!board.at(i, j)) continue;
      if (!board.at(i, j - 1)) next[{i, j}] = {i + 1, j};
      if (!board.at(i + 1, j)) next[{i + 1, j}] = {i + 1, j + 1};
      if (!board.at(i, j + 1)) next[{i + 1, j + 1}] = {i, j + 1};
      if (!board.at(i - 1, j)) next[{i, j + 1}] = {i, j};
    }
  }
  // Start at the lowest, then leftmost corner.
  std::pair<int, int> start = next.begin()->first;
  for (const auto& [from, to] : next) {
    if (from.second < start.second ||
        (from.second == start.second && from.first < start.first)) {
      start = from;
    }
  }
  std::vector<Point> vertices;
  std::pair<int, int> cur = start;
  do {
    vertices.push_back({xs[static_cast<std::size_t>(cur.first)],
                        ys[static_cast<std::size_t>(cur.second)]});
    cur = next.at(cur);
  } while (cur != start);
  return ValidatePolygon(vertices);
}

}  // namespace

OrthoPolygon GeneratePolygon(std::uint64_t seed, int target_vertices,
                             const GeneratorOptions& options) {
  if (target_vertices < 4 || target_vertices % 2 != 0) {
    throw std::invalid_argument("vertex count must be even and at least 4, got " +
                                std::to_string(target_vertices));
  }
  const int size = options.board_cells > 0 ? options.board_cells
                                           : target_vertices / 2 + 2;
  if (options.max_cell_size < 1) {
    throw std::invalid_argument("max_cell_size must be positive");
  }
  std::mt19937_64 rng(seed);

  std::vector<Coord> xs{0}, ys{0};
  for (int i = 0; i < size; ++i) {
    xs.push_back(xs.back() + 1 + static_cast<Coord>(Draw(rng, options.max_cell_size)));
    ys.push_back(ys.back() + 1 + static_cast<Coord>(Draw(rng, options.max_cell_size)));
  }

  const int max_steps = 400 * target_vertices;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    CellBoard board(size);
    board.set(static_cast<int>(Draw(rng, size)), static_cast<int>(Draw(rng, size)), true);
    int corners = 4;
    for (int step = 0; step < max_steps && corners != target_vertices; ++step) {
      const bool grow = corners < target_vertices ? Draw(rng, 10) < 8
                                                  : Draw(rng, 10) < 2;
      // Candidate cells: empty 4-neighbors when growing, filled cells otherwise.
      std::vector<std::pair<int, int>> options_list;
      for (int j = 0; j < size; ++j) {
        for (int i = 0; i < size; ++i) {
          const bool near = board.at(i - 1, j) || board.at(i + 1, j) ||
                            board.at(i, j - 1) || board.at(i, j + 1);
          if (grow ? (!board.at(i, j) && near) : board.at(i, j)) {
            options_list.emplace_back(i, j);
          }
        }
      }
      if (options_list.empty() || (!grow && board.count() == 1)) continue;
      const auto [i, j] = options_list[Draw(rng, options_list.size())];
      board.set(i, j, grow);
      const int c = board.Corners();
      if (c < 0 || !board.SimplyConnected()) {
        board.set(i, j, !grow);
        continue;
      }
      corners = c;
    }
    if (corners == target_vertices) return Trace(board, xs, ys);
  }
  throw std::runtime_error("generator failed to reach " +
                           std::to_string(target_vertices) + " vertices");
}

}  // namespace slidecam
