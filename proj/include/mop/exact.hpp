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

// Exact rainbow connection numbers by exhaustive search.
//
// Colorings are enumerated as restricted growth strings over the edges
// (first edge color 1, each edge at most one above the largest color so
// far), which visits every partition of the edge set into <= k color
// classes exactly once. A partial coloring is pruned when some pair has no
// path of length <= k whose colored edges are distinct, treating uncolored
// edges as free. That relaxation holds for every completion, so pruning
// never loses a solution.

#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "mop/edge_coloring.hpp"
#include "mop/error.hpp"
#include "mop/graph.hpp"
#include "mop/metrics.hpp"
#include "mop/verify.hpp"

namespace mop {

struct ExactOptions {
  /// Searches over more edges than this need a deadline.
  int max_edges = 22;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  OracleLimits limits;
};

struct ExactResult {
  int value = 0;
  /// First coloring found at `value` in search order; uses exactly
  /// `value` colors.
  EdgeColoring certificate;
  /// value - 1 is infeasible: either below the diameter or searched out.
  int infeasible_below = 0;
  /// True when `infeasible_below` was established by exhaustive search
  /// rather than by the diameter bound.
  bool searched_below = false;
};

namespace detail {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, PathMode mode, const ExactOptions& opt,
                 const std::vector<std::vector<int>>* dist)
      : g_(g), k_(k), mode_(mode), opt_(opt), dist_(dist) {
    // Edges in order of their larger endpoint, then smaller: construction
    // order for canonical labels.
    for (int id = 0; id < g.size(); ++id) order_.push_back(id);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const Edge& x = g.edge(a);
      const Edge& y = g.edge(b);
      return std::pair{x.v, x.u} < std::pair{y.v, y.u};
    });
    colors_.assign(g.size(), 0);
  }

  std::optional<EdgeColoring> run() {
    if (g_.size() == 0) return EdgeColoring{};
    if (opt_.deadline && std::chrono::steady_clock::now() > *opt_.deadline) {
      timed_out_ = true;
      return std::nullopt;
    }
    if (dfs(0, 0)) return EdgeColoring(colors_);
    return std::nullopt;
  }

  bool timed_out() const noexcept { return timed_out_; }

 private:
  bool feasible() {
    ColorBits bits(g_, colors_, opt_.limits.max_colors);
    return check_pairs(g_, colors_, bits, k_, mode_, dist_, false).ok;
  }

  bool dfs(int idx, int max_color) {
    if (opt_.deadline && (++ticks_ & 255) == 0 &&
        std::chrono::steady_clock::now() > *opt_.deadline) {
      timed_out_ = true;
    }
    if (timed_out_) return false;
    if (idx == static_cast<int>(order_.size())) return true;
    int id = order_[idx];
    int top = std::min(max_color + 1, k_);
    for (int c = 1; c <= top; ++c) {
      colors_[id] = c;
      if (feasible() && dfs(idx + 1, std::max(max_color, c))) return true;
      if (timed_out_) break;
    }
    colors_[id] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  PathMode mode_;
  const ExactOptions& opt_;
  const std::vector<std::vector<int>>* dist_;
  std::vector<int> order_;
  std::vector<int> colors_;
  bool timed_out_ = false;
  unsigned ticks_ = 0;
};

inline ExactResult exact_search(const Graph& g, int k_max, PathMode mode,
                                const ExactOptions& opt) {
  if (g.order() > opt.limits.max_n) {
    throw ScaleLimit("graph has " + std::to_string(g.order()) +
                     " vertices, cap is " + std::to_string(opt.limits.max_n));
  }
  if (g.size() > opt.max_edges && !opt.deadline) {
    throw ScaleLimit("graph has " + std::to_string(g.size()) +
                     " edges; full search is capped at " +
                     std::to_string(opt.max_edges) + " without a timeout");
  }
  if (!is_connected(g)) throw Error("exact search needs a connected graph");
  auto dist = all_distances(g);
  int diam = 0;
  for (Vertex s = 1; s <= g.order(); ++s) {
    for (Vertex t = 1; t <= g.order(); ++t) diam = std::max(diam, dist[s][t]);
  }
  const int lower = std::max(1, diam);
  for (int k = lower; k <= k_max; ++k) {
    if (k > opt.limits.max_colors) {
      throw ScaleLimit("search would need more than " +
                       std::to_string(opt.limits.max_colors) + " colors");
    }
    ColoringSearch search(g, k, mode, opt, &dist);
    auto found = search.run();
    if (search.timed_out()) {
      throw Exhausted("timed out while searching k = " + std::to_string(k),
                      true);
    }
    if (found) {
      ExactResult r;
      r.value = found->colors_used();
      r.certificate = std::move(*found);
      r.infeasible_below = r.value - 1;
      r.searched_below = r.value > lower;
      return r;
    }
  }
  throw Exhausted("no coloring with at most " + std::to_string(k_max) +
                      " colors (all k from " + std::to_string(lower) +
                      " searched)",
                  false);
}

}  // namespace detail

/// Smallest k <= k_max admitting a rainbow coloring, with a certificate.
inline ExactResult exact_rc(const Graph& g, int k_max,
                            const ExactOptions& opt = {}) {
  return detail::exact_search(g, k_max, detail::PathMode::any, opt);
}

/// Smallest k <= k_max admitting a strong rainbow coloring.
inline ExactResult exact_src(const Graph& g, int k_max,
                             const ExactOptions& opt = {}) {
  return detail::exact_search(g, k_max, detail::PathMode::geodesic, opt);
}

}  // namespace mop
