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

// Exact rainbow-connectivity oracles.
//
// Searches run over states (vertex, set of colors used) breadth-first by
// path length. A state is dropped when the same vertex was already reached
// with a subset of its colors at no greater length. Any walk with pairwise
// distinct edge colors shortcuts to a path with the same property, so
// vertex repetition needs no tracking. No heuristics: a pair is reported
// disconnected only after its state space is exhausted.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mop/edge_coloring.hpp"
#include "mop/error.hpp"
#include "mop/graph.hpp"
#include "mop/metrics.hpp"

namespace mop {

struct OracleLimits {
  int max_n = 200;
  int max_colors = 32;
};

struct RainbowWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> path;
};

struct VerifyReport {
  bool ok = true;
  /// First pair (u < v, lexicographic) with no rainbow path, when !ok.
  std::optional<std::pair<Vertex, Vertex>> counterexample;
  /// One rainbow path per pair u < v, filled only on request and when ok.
  std::vector<RainbowWitness> witnesses;
};

namespace detail {

/// Edge colors mapped to bit positions. Color 0 is a wildcard: it uses no
/// bit but still counts toward path length.
struct ColorBits {
  std::vector<std::uint32_t> bit;  // by edge id
  int distinct = 0;

  ColorBits(const Graph& g, const std::vector<int>& colors, int max_colors) {
    bit.assign(g.size(), 0);
    if (std::all_of(colors.begin(), colors.end(),
                    [](int c) { return c >= 0 && c <= 32; })) {
      std::uint32_t all = 0;
      for (int id = 0; id < g.size(); ++id) {
        if (colors[id] > 0) bit[id] = std::uint32_t{1} << (colors[id] - 1);
        all |= bit[id];
      }
      distinct = std::popcount(all);
      if (distinct > max_colors) {
        throw ScaleLimit("coloring uses " + std::to_string(distinct) +
                         " colors, cap is " + std::to_string(max_colors));
      }
      return;
    }
    std::map<int, int> index;
    for (int c : colors) {
      if (c > 0) index.emplace(c, 0);
    }
    distinct = static_cast<int>(index.size());
    if (distinct > max_colors || distinct > 32) {
      throw ScaleLimit("coloring uses " + std::to_string(distinct) +
                       " colors, cap is " + std::to_string(std::min(max_colors, 32)));
    }
    int k = 0;
    for (auto& [c, i] : index) i = k++;
    for (int id = 0; id < g.size(); ++id) {
      if (colors[id] > 0) bit[id] = std::uint32_t{1} << index[colors[id]];
    }
  }
};

enum class PathMode { any, geodesic };

/// Breadth-first search over (vertex, color set) from one source.
class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, const ColorBits& bits, int length_cap,
                PathMode mode, const std::vector<std::vector<int>>* dist)
      : g_(g), bits_(bits), cap_(length_cap), mode_(mode), dist_(dist) {}

  /// Explores from `s` until every vertex flagged in `want` is reached or
  /// the space is exhausted. Returns the flags of reached vertices.
  std::vector<char> run(Vertex s, const std::vector<char>& want) {
    const int n = g_.order();
    states_.clear();
    seen_.assign(n + 1, {});
    first_.assign(n + 1, -1);
    std::vector<char> reached(n + 1, 0);
    int missing = 0;
    for (Vertex t = 1; t <= n; ++t) {
      if (want[t] && t != s) ++missing;
    }
    reached[s] = 1;
    first_[s] = 0;
    states_.push_back({s, 0, -1});
    seen_[s].push_back(0);
    std::size_t level_begin = 0;
    for (int len = 0; len < cap_ && missing > 0; ++len) {
      std::size_t level_end = states_.size();
      if (level_begin == level_end) break;
      for (std::size_t i = level_begin; i < level_end && missing > 0; ++i) {
        State st = states_[i];
        auto nb = g_.neighbors(st.v);
        auto ids = g_.incident_edges(st.v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
          Vertex y = nb[k];
          std::uint32_t b = bits_.bit[ids[k]];
          if (st.mask & b) continue;
          if (mode_ == PathMode::geodesic &&
              (*dist_)[s][y] != (*dist_)[s][st.v] + 1) {
            continue;
          }
          std::uint32_t mask = st.mask | b;
          if (dominated(y, mask)) continue;
          seen_[y].push_back(mask);
          states_.push_back({y, mask, static_cast<int>(i)});
          if (!reached[y]) {
            reached[y] = 1;
            first_[y] = static_cast<int>(states_.size()) - 1;
            if (want[y]) --missing;
          }
        }
      }
      level_begin = level_end;
    }
    return reached;
  }

  /// Path to `t` from the most recent run, if reached.
  std::vector<Vertex> path_to(Vertex t) const {
    std::vector<Vertex> p;
    for (int i = first_.at(t); i != -1; i = states_[i].parent) {
      p.push_back(states_[i].v);
    }
    std::reverse(p.begin(), p.end());
    return p;
  }

 private:
  struct State {
    Vertex v;
    std::uint32_t mask;
    int parent;
  };

  bool dominated(Vertex y, std::uint32_t mask) const {
    for (std::uint32_t m : seen_[y]) {
      if ((m & mask) == m) return true;
    }
    return false;
  }

  const Graph& g_;
  const ColorBits& bits_;
  int cap_;
  PathMode mode_;
  const std::vector<std::vector<int>>* dist_;
  std::vector<State> states_;
  std::vector<std::vector<std::uint32_t>> seen_;
  std::vector<int> first_;
};

inline std::vector<std::vector<int>> all_distances(const Graph& g) {
  std::vector<std::vector<int>> d(g.order() + 1);
  for (Vertex s = 1; s <= g.order(); ++s) d[s] = bfs(g, s).dist;
  return d;
}

/// Shared driver: every pair u < v must be joined. `colors` may contain
/// wildcards (0). Path length is capped at `length_cap`.
inline VerifyReport check_pairs(const Graph& g, const std::vector<int>& colors,
                                const ColorBits& bits, int length_cap,
                                PathMode mode,
                                const std::vector<std::vector<int>>* dist,
                                bool want_witness) {
  (void)colors;
  VerifyReport rep;
  RainbowSearch search(g, bits, length_cap, mode, dist);
  const int n = g.order();
  std::vector<char> want(n + 1, 0);
  for (Vertex s = 1; s < n; ++s) {
    std::fill(want.begin(), want.end(), 0);
    for (Vertex t = s + 1; t <= n; ++t) want[t] = 1;
    auto reached = search.run(s, want);
    for (Vertex t = s + 1; t <= n; ++t) {
      if (!reached[t]) {
        rep.ok = false;
        rep.counterexample = std::pair{s, t};
        rep.witnesses.clear();
        return rep;
      }
      if (want_witness) rep.witnesses.push_back({s, t, search.path_to(t)});
    }
  }
  return rep;
}

inline void check_scale(const Graph& g, const EdgeColoring& c,
                        const OracleLimits& lim) {
  if (g.order() > lim.max_n) {
    throw ScaleLimit("graph has " + std::to_string(g.order()) +
                     " vertices, cap is " + std::to_string(lim.max_n));
  }
  if (static_cast<int>(c.colors.size()) != g.size()) {
    throw Error("coloring size does not match the edge count");
  }
  if (!c.is_total()) throw Error("coloring is not total");
}

}  // namespace detail

/// Every pair of vertices is joined by a path with distinct edge colors.
inline VerifyReport is_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                         const OracleLimits& lim = {},
                                         bool want_witness = false) {
  detail::check_scale(g, c, lim);
  detail::ColorBits bits(g, c.colors, lim.max_colors);
  if (!is_connected(g)) {
    VerifyReport rep;
    auto comp = component_labels(g);
    for (Vertex t = 2; t <= g.order(); ++t) {
      if (comp[t] != comp[1]) {
        rep.ok = false;
        rep.counterexample = std::pair{1, t};
        return rep;
      }
    }
  }
  return detail::check_pairs(g, c.colors, bits, bits.distinct,
                             detail::PathMode::any, nullptr, want_witness);
}

/// Every pair is joined by a rainbow shortest path.
inline VerifyReport is_strong_rainbow_connected(const Graph& g,
                                                const EdgeColoring& c,
                                                const OracleLimits& lim = {},
                                                bool want_witness = false) {
  detail::check_scale(g, c, lim);
  detail::ColorBits bits(g, c.colors, lim.max_colors);
  if (!is_connected(g)) {
    VerifyReport rep;
    rep.ok = false;
    auto comp = component_labels(g);
    for (Vertex t = 2; t <= g.order(); ++t) {
      if (comp[t] != comp[1]) {
        rep.counterexample = std::pair{1, t};
        break;
      }
    }
    return rep;
  }
  auto dist = detail::all_distances(g);
  return detail::check_pairs(g, c.colors, bits, bits.distinct,
                             detail::PathMode::geodesic, &dist, want_witness);
}

/// A rainbow u-v path, if one exists.
inline std::optional<std::vector<Vertex>> rainbow_path(const Graph& g,
                                                       const EdgeColoring& c,
                                                       Vertex u, Vertex v,
                                                       const OracleLimits& lim = {}) {
  detail::check_scale(g, c, lim);
  detail::ColorBits bits(g, c.colors, lim.max_colors);
  detail::RainbowSearch search(g, bits, bits.distinct, detail::PathMode::any,
                               nullptr);
  std::vector<char> want(g.order() + 1, 0);
  want[v] = 1;
  auto reached = search.run(u, want);
  if (!reached[v]) return std::nullopt;
  return search.path_to(v);
}

/// True when `path` is a simple path in `g` whose edges have distinct colors.
inline bool is_rainbow_path(const Graph& g, const EdgeColoring& c,
                            const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  std::vector<Vertex> verts = path;
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
  std::vector<int> used;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto id = g.edge_id(path[i], path[i + 1]);
    if (!id) return false;
    if (std::find(used.begin(), used.end(), c[*id]) != used.end()) return false;
    used.push_back(c[*id]);
  }
  return true;
}

}  // namespace mop
