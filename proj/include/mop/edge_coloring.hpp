// Copyright 2026 The moprc Authors
//
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

#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

/// Total map from the edges of a graph (by edge id) to colors >= 1.
/// Color 0 marks an uncolored edge while a coloring is being built.
struct EdgeColoring {
  std::vector<int> colors;

  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<int> c) : colors(std::move(c)) {}
  static EdgeColoring uncolored(const Graph& g) {
    return EdgeColoring(std::vector<int>(g.size(), 0));
  }

  int operator[](int edge_id) const { return colors.at(edge_id); }
  int& operator[](int edge_id) { return colors.at(edge_id); }

  int color(const Graph& g, Vertex a, Vertex b) const {
    auto id = g.edge_id(a, b);
    if (!id) throw Error("coloring: no edge {" + std::to_string(a) + "," +
                         std::to_string(b) + "}");
    return colors[*id];
  }

  bool is_total() const {
    return std::all_of(colors.begin(), colors.end(),
                       [](int c) { return c >= 1; });
  }

  /// Largest color value.
  int palette_size() const {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  }

  /// Number of distinct colors actually present.
  int colors_used() const {
    std::set<int> s;
    for (int c : colors) {
      if (c >= 1) s.insert(c);
    }
    return static_cast<int>(s.size());
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

}  // namespace mop
