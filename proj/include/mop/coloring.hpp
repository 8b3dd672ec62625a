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

// Rainbow edge coloring of a MOP with at most 3 * rad colors.
//
// Layers N_k are BFS levels from the CCS root. Each layer gets its own
// color triple (a, b, c). Walking the path segments of G[N_k] in cycle
// order, the edges from each vertex down to N_{k-1} are listed
// consecutively and colored a, b, a, b, ...; edges inside N_k get c.
//
// Layer 1 (the root fan) uses {4, 5, 6}, the outermost layer {1, 2, 3},
// and layer k in between uses (C1[k-2], C2[k-2], C3[k-2]).

#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "mop/core.hpp"
#include "mop/edge_coloring.hpp"
#include "mop/error.hpp"
#include "mop/spine.hpp"

namespace mop {

/// Color blocks for a graph of radius `rad`.
struct ColorPalette {
  int rad = 0;
  std::array<int, 3> fixed_fan_root{4, 5, 6};
  std::array<int, 3> fixed_fan_other{1, 2, 3};
  std::vector<int> c1;  // 7 .. rad+4
  std::vector<int> c2;  // rad+5 .. 2rad+2
  std::vector<int> c3;  // 2rad+3 .. 3rad

  explicit ColorPalette(int radius) : rad(radius) {
    for (int x = 7; x <= rad + 4; ++x) c1.push_back(x);
    for (int x = rad + 5; x <= 2 * rad + 2; ++x) c2.push_back(x);
    for (int x = 2 * rad + 3; x <= 3 * rad; ++x) c3.push_back(x);
  }

  /// (down a, down b, inside) for BFS layer k in 1..rad.
  std::array<int, 3> layer(int k) const {
    if (k == rad) return fixed_fan_other;
    if (k == 1) return fixed_fan_root;
    std::size_t i = static_cast<std::size_t>(k - 2);
    if (k < 1 || k > rad || i >= c1.size() || i >= c2.size() || i >= c3.size()) {
      throw PaletteExhausted("no color triple for layer " + std::to_string(k) +
                             " at radius " + std::to_string(rad));
    }
    return {c1[i], c2[i], c3[i]};
  }

  int bound() const noexcept { return 3 * rad; }
};

struct ColoringStats {
  int colors_used = 0;
  int palette_bound = 0;  // 3 * rad
  int excess_c = 0;       // colors_used - (2 rad + 2), at least 0
  int cleanup_edges = 0;  // edges left to the final fill; expected 0
};

struct RainbowColoring {
  EdgeColoring coloring;
  ColoringStats stats;
  CcsTree ccs;
};

inline RainbowColoring rainbow_color(const MopGraph& m) {
  const Graph& g = m.graph();
  RainbowColoring out;
  out.ccs = build_ccs(m);
  const CcsTree& t = out.ccs;
  const Vertex root = t.root_vertex;
  const int rad = t.radius;
  EdgeColoring& c = out.coloring;
  c = EdgeColoring::uncolored(g);
  auto paint = [&](Vertex a, Vertex b, int color) {
    int id = *g.edge_id(a, b);
    if (c[id] == 0) c[id] = color;
  };

  if (rad <= 1) {
    if (m.order() == 3) {
      for (int id = 0; id < g.size(); ++id) c[id] = 1;
    } else {
      auto path = m.fan_path(root);
      for (std::size_t j = 0; j < path.size(); ++j) {
        paint(root, path[j], j % 2 == 0 ? 1 : 2);
      }
      for (std::size_t j = 0; j + 1 < path.size(); ++j) paint(path[j], path[j + 1], 3);
    }
  } else {
    ColorPalette pal(rad);
    for (int k = 1; k <= rad; ++k) {
      auto [ca, cb, cin] = pal.layer(k);
      for (const auto& seg : detail::layer_segments(m, t.layer, k, root)) {
        bool use_a = true;
        for (std::size_t j = 0; j < seg.size(); ++j) {
          Vertex x = seg[j];
          std::vector<Vertex> down;
          for (Vertex y : g.neighbors(x)) {
            if (t.layer[y] == k - 1) down.push_back(y);
          }
          std::sort(down.begin(), down.end(), [&](Vertex p, Vertex q) {
            return m.cycle_offset(root, p) < m.cycle_offset(root, q);
          });
          for (Vertex y : down) {
            paint(x, y, use_a ? ca : cb);
            use_a = !use_a;
          }
          if (j + 1 < seg.size()) paint(x, seg[j + 1], cin);
        }
      }
    }
  }

  for (int id = 0; id < g.size(); ++id) {
    if (c[id] == 0) {
      c[id] = 3;
      ++out.stats.cleanup_edges;
    }
  }
  out.stats.colors_used = c.colors_used();
  out.stats.palette_bound = 3 * rad;
  out.stats.excess_c = std::max(0, out.stats.colors_used - (2 * rad + 2));
  return out;
}

}  // namespace mop
