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
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "mop/core.hpp"
#include "mop/error.hpp"
#include "mop/graph.hpp"

namespace mop {

inline constexpr int kUnreached = -1;

/// BFS tree from one source. Parents are the smallest-labeled neighbor on
/// the previous level, so the tree is deterministic.
struct DistanceTable {
  Vertex source = 0;
  std::vector<int> dist;       // by vertex; kUnreached if disconnected
  std::vector<Vertex> parent;  // 0 for the source and unreached vertices

  std::vector<Vertex> path_to(Vertex v) const {
    std::vector<Vertex> p;
    if (dist.at(v) == kUnreached) return p;
    for (Vertex x = v; x != 0; x = parent[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

inline DistanceTable bfs(const Graph& g, Vertex source) {
  DistanceTable t;
  t.source = source;
  t.dist.assign(g.order() + 1, kUnreached);
  t.parent.assign(g.order() + 1, 0);
  std::vector<Vertex> queue{source};
  t.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (t.dist[y] == kUnreached) {
        t.dist[y] = t.dist[x] + 1;
        t.parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return t;
}

struct Eccentricities {
  std::vector<int> ecc;  // by vertex, index 0 unused
  int diam = 0;
  int rad = 0;
  std::vector<Vertex> center;
};

namespace detail {

inline Eccentricities summarize(std::vector<int> ecc) {
  Eccentricities r;
  r.ecc = std::move(ecc);
  const int n = static_cast<int>(r.ecc.size()) - 1;
  r.rad = std::numeric_limits<int>::max();
  for (Vertex v = 1; v <= n; ++v) {
    r.diam = std::max(r.diam, r.ecc[v]);
    r.rad = std::min(r.rad, r.ecc[v]);
  }
  if (n == 0) r.rad = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (r.ecc[v] == r.rad) r.center.push_back(v);
  }
  return r;
}

}  // namespace detail

/// All-sources BFS. O(n (n + m)); the reference path for every other
/// eccentricity computation.
inline Eccentricities ecc_diam_rad_center(const Graph& g) {
  std::vector<int> ecc(g.order() + 1, 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto t = bfs(g, v);
    for (Vertex w = 1; w <= g.order(); ++w) {
      if (t.dist[w] == kUnreached) throw Error("graph is disconnected");
      ecc[v] = std::max(ecc[v], t.dist[w]);
    }
  }
  return detail::summarize(std::move(ecc));
}

/// N_k(S) for k = 0, 1, ... up to the farthest vertex. Layers are sorted.
inline std::vector<std::vector<Vertex>> layers(const Graph& g,
                                               std::span<const Vertex> sources) {
  std::vector<int> dist(g.order() + 1, kUnreached);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (dist.at(s) == kUnreached) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (dist[v] == kUnreached) continue;
    if (static_cast<int>(out.size()) <= dist[v]) out.resize(dist[v] + 1);
    out[dist[v]].push_back(v);
  }
  return out;
}

inline std::vector<std::vector<Vertex>> layers(const Graph& g, Vertex source) {
  Vertex s[] = {source};
  return layers(g, std::span<const Vertex>(s));
}

/// Shortest cycle length bound covering every edge. Always 3 for a MOP; the
/// triangle membership is checked rather than assumed.
inline int eta(const MopGraph& m) {
  const Graph& g = m.graph();
  for (const Edge& e : g.edges()) {
    if (g.common_neighbors(e.u, e.v).empty()) {
      throw NotMop("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   "} lies in no triangle");
    }
  }
  return 3;
}

}  // namespace mop
