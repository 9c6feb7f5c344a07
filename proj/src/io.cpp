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

#include "slidecam/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "slidecam/error.hpp"

namespace slidecam {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Coord ParseInteger(std::string_view token, int line_no) {
  Coord value = 0;
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": not an integer: '" +
                                       std::string(token) + "'");
  }
  return value;
}

}  // namespace

OrthoPolygon ParsePolygon(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::vector<int> line_numbers;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = Tokens(line);
    if (tokens.empty()) continue;
    lines.push_back(std::move(tokens));
    line_numbers.push_back(line_no);
  }
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty polygon file");
  if (lines[0].size() != 1) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_numbers[0]) +
                                       ": expected the vertex count");
  }
  const Coord n = ParseInteger(lines[0][0], line_numbers[0]);
  if (n < 0 || static_cast<std::size_t>(n) != lines.size() - 1) {
    throw Error(ErrorCode::kParse,
                "header announces " + std::to_string(n) + " vertices, found " +
                    std::to_string(lines.size() - 1));
  }
  std::vector<Point> vertices;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_numbers[i]) +
                                         ": expected 'x y'");
    }
    vertices.push_back({ParseInteger(lines[i][0], line_numbers[i]),
                        ParseInteger(lines[i][1], line_numbers[i])});
  }
  return ValidatePolygon(vertices);
}

OrthoPolygon ReadPolygonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParsePolygon(buffer.str());
}

std::string FormatPolygon(const OrthoPolygon& polygon) {
  std::ostringstream os;
  os << polygon.size() << '\n';
  for (const Point& p : polygon.vertices()) os << p.x << ' ' << p.y << '\n';
  return os.str();
}

std::string FormatCameras(std::span<const OrthoSegment> cameras) {
  std::ostringstream os;
  for (const OrthoSegment& s : cameras) os << s << '\n';
  return os.str();
}

}  // namespace slidecam
