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

// Linear-time vertex eccentricities of a MOP via signed edge eccentricities
// (Farley & Proskurowski).
//
// For an edge p = (s, t) and one side S of it, e(p, x, S) is signed:
// |e| is the eccentricity of x in G[S + {s, t}], and e < 0 iff every vertex
// at that distance from x is one step closer to the other endpoint. An
// empty side gives -1 for both endpoints.
//
// Combining across a triangle (s, t, w) on side S, with a = (s, w) and
// b = (t, w) and their sides S1, S2 facing away from the triangle:
//
//   r          = |e(b,t,S2)|       if e(b,t,S2) < 0
//              = e(b,t,S2) + 1     otherwise
//   e(p,s,S)   = |e(a,s,S1)|       if |e(a,s,S1)| >= r
//              = -r                if e(b,t,S2) > 0
//              = r                 otherwise
//
// The first branch is never negative: vertices reached through S1 are
// never closer to t than to s.

#pragma once

#include <array>
#include <cstdlib>
#include <vector>

#include "mop/core.hpp"
#include "mop/error.hpp"
#include "mop/metrics.hpp"

namespace mop {

/// One signed edge eccentricity. `side` indexes `triangles(m)` for the
/// triangle bounding that side, or is -1 for the empty outer side.
struct EdgeEccentricity {
  Edge edge;
  int side = -1;
  Vertex anchor = 0;
  int value = 0;
};

namespace detail {

class EdgeSweep {
 public:
  explicit EdgeSweep(const MopGraph& m)
      : m_(m), g_(m.graph()), tris_(triangles(m)) {
    const int n = m.order();
    if (static_cast<int>(tris_.size()) != n - 2) {
      throw NotMop("expected " + std::to_string(n - 2) + " triangles, found " +
                   std::to_string(tris_.size()));
    }
    edge_tris_.assign(g_.size(), {-1, -1});
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
      for (int id : tri_edges(t)) {
        auto& slots = edge_tris_[id];
        if (slots[0] == -1) {
          slots[0] = t;
        } else if (slots[1] == -1) {
          slots[1] = t;
        } else {
          throw NotMop("edge in more than two triangles");
        }
      }
    }
    // val_[id][slot] = {e(p, u, side), e(p, v, side)} with u < v the edge
    // endpoints and the side holding triangle edge_tris_[id][slot].
    val_.assign(g_.size(), {Pair{0, 0}, Pair{0, 0}});
    run();
  }

  std::vector<int> vertex_eccentricities() const {
    std::vector<int> ecc(m_.order() + 1, 0);
    for (Vertex v = 1; v <= m_.order(); ++v) {
      int id = g_.incident_edges(v)[0];
      const Edge& e = g_.edge(id);
      int best = 0;
      for (int slot = 0; slot < 2; ++slot) {
        Pair p = side_value(id, slot);
        best = std::max(best, std::abs(v == e.u ? p.at_u : p.at_v));
      }
      ecc[v] = best;
    }
    return ecc;
  }

  std::vector<EdgeEccentricity> all() const {
    std::vector<EdgeEccentricity> out;
    for (int id = 0; id < g_.size(); ++id) {
      for (int slot = 0; slot < 2; ++slot) {
        Pair p = side_value(id, slot);
        int side = edge_tris_[id][slot];
        out.push_back({g_.edge(id), side, g_.edge(id).u, p.at_u});
        out.push_back({g_.edge(id), side, g_.edge(id).v, p.at_v});
      }
    }
    return out;
  }

 private:
  struct Pair {
    int at_u;
    int at_v;
  };

  std::array<int, 3> tri_edges(int t) const {
    const Triangle& tr = tris_[t];
    return {*g_.edge_id(tr[0], tr[1]), *g_.edge_id(tr[0], tr[2]),
            *g_.edge_id(tr[1], tr[2])};
  }

  Pair side_value(int id, int slot) const {
    if (edge_tris_[id][slot] == -1) return {-1, -1};
    return val_[id][slot];
  }

  int slot_of(int id, int t) const { return edge_tris_[id][0] == t ? 0 : 1; }

  /// e(edge, x, side facing away from triangle t).
  int away(int id, int t, Vertex x) const {
    Pair p = side_value(id, 1 - slot_of(id, t));
    return x == g_.edge(id).u ? p.at_u : p.at_v;
  }

  static int combine(int e3, int e2) {
    int r = e2 < 0 ? -e2 : e2 + 1;
    if (std::abs(e3) >= r) return std::abs(e3);
    return e2 > 0 ? -r : r;
  }

  /// Value of edge `id` on the side containing triangle `t`.
  void compute(int id, int t) {
    const Edge& p = g_.edge(id);
    const Triangle& tr = tris_[t];
    Vertex w = tr[0] != p.u && tr[0] != p.v   ? tr[0]
               : tr[1] != p.u && tr[1] != p.v ? tr[1]
                                              : tr[2];
    int a = *g_.edge_id(p.u, w);  // (s, w) with s = u
    int b = *g_.edge_id(p.v, w);  // (t, w) with t = v
    int at_u = combine(away(a, t, p.u), away(b, t, p.v));
    int at_v = combine(away(b, t, p.v), away(a, t, p.u));
    val_[id][slot_of(id, t)] = {at_u, at_v};
  }

  void run() {
    const int k = static_cast<int>(tris_.size());
    std::vector<int> order{0}, parent_edge(k, -1);
    std::vector<char> seen(k, 0);
    seen[0] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      int t = order[h];
      for (int id : tri_edges(t)) {
        int other = edge_tris_[id][0] == t ? edge_tris_[id][1] : edge_tris_[id][0];
        if (other == -1 || other == t) continue;
        if (seen[other]) {
          if (id != parent_edge[t]) throw NotMop("triangle adjacency has a cycle");
          continue;
        }
        seen[other] = 1;
        parent_edge[other] = id;
        order.push_back(other);
      }
    }
    if (static_cast<int>(order.size()) != k) {
      throw NotMop("triangle adjacency is disconnected");
    }
    // Leaves to root: each triangle's parent edge, seen from below.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (parent_edge[*it] != -1) compute(parent_edge[*it], *it);
    }
    // Root to leaves: every other edge of each triangle, seen from it.
    for (int t : order) {
      for (int id : tri_edges(t)) {
        if (id == parent_edge[t]) continue;
        compute(id, t);
      }
    }
  }

  const MopGraph& m_;
  const Graph& g_;
  std::vector<Triangle> tris_;
  std::vector<std::array<int, 2>> edge_tris_;
  std::vector<std::array<Pair, 2>> val_;
};

}  // namespace detail

/// All 4 signed edge eccentricities per edge (2 per side, empty sides
/// included as -1).
inline std::vector<EdgeEccentricity> edge_eccentricities(const MopGraph& m) {
  return detail::EdgeSweep(m).all();
}

/// Per-vertex eccentricities in O(n) from the edge sweep: the larger
/// magnitude of the two side values at any incident edge.
inline std::vector<int> farley_eccentricities(const MopGraph& m) {
  return detail::EdgeSweep(m).vertex_eccentricities();
}

/// Diameter, radius and center from the linear sweep.
inline Eccentricities farley_diam_rad_center(const MopGraph& m) {
  return detail::summarize(farley_eccentricities(m));
}

}  // namespace mop
