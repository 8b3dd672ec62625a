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

// Maximal outerplanar graphs: canonical construction arrays, the validated
// MopGraph view, and structural queries (Hamiltonian cycle, triangles).

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "mop/error.hpp"
#include "mop/graph.hpp"

namespace mop {

/// Construction-order representation: vertex i (3 <= i <= n) is attached to
/// the exterior edge {low(i), high(i)} of the graph on 1..i-1.
///
/// Row 3 is always (1, 2); it is stored so that every i in 3..n has a row.
class CanonicalMop {
 public:
  struct Row {
    Vertex low = 0;
    Vertex high = 0;
    friend bool operator==(const Row&, const Row&) = default;
  };

  /// `rows[k]` describes vertex k + 3. Throws DomainError when n < 3 or the
  /// row count is wrong, InvalidAttachment when 1 <= low < high < i fails.
  CanonicalMop(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 3) throw DomainError("canonical MOP needs n >= 3");
    if (static_cast<int>(rows_.size()) != n_ - 2) {
      throw DomainError("canonical MOP with n = " + std::to_string(n_) +
                        " needs " + std::to_string(n_ - 2) + " rows");
    }
    for (Vertex i = 3; i <= n_; ++i) {
      const Row& r = row(i);
      if (!(1 <= r.low && r.low < r.high && r.high < i)) {
        throw InvalidAttachment(i, "need 1 <= Low < High < " +
                                       std::to_string(i));
      }
    }
  }

  static CanonicalMop triangle() { return CanonicalMop(3, {{1, 2}}); }

  int order() const noexcept { return n_; }
  const Row& row(Vertex i) const { return rows_.at(i - 3); }
  Vertex low(Vertex i) const { return row(i).low; }
  Vertex high(Vertex i) const { return row(i).high; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  friend bool operator==(const CanonicalMop&, const CanonicalMop&) = default;

 private:
  int n_;
  std::vector<Row> rows_;
};

enum class EdgeKind { outer, chord };

/// Result of the neighborhood-path plus 2-degeneracy test.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks that a simple graph is a MOP: connected, n >= 3, every open
/// neighborhood induces a path, and minimum-degree deletion never gets
/// stuck above degree 2.
inline ValidationReport validate_mop(const Graph& g) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const int n = g.order();
  if (n < 3) fail("fewer than 3 vertices");
  if (!is_connected(g)) fail("graph is disconnected");

  for (Vertex v = 1; v <= n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) {
      fail("vertex " + std::to_string(v) + ": empty neighborhood");
      continue;
    }
    // Induced path on N(v): connected, acyclic, all degrees <= 2.
    int inner_edges = 0;
    bool deg_ok = true;
    for (Vertex x : nb) {
      int d = 0;
      for (Vertex y : g.neighbors(x)) {
        if (std::binary_search(nb.begin(), nb.end(), y)) ++d;
      }
      if (d > 2) deg_ok = false;
      inner_edges += d;
    }
    inner_edges /= 2;
    bool connected = true;
    {
      std::vector<Vertex> seen{nb.front()};
      std::vector<Vertex> stack{nb.front()};
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
          if (std::binary_search(nb.begin(), nb.end(), y) &&
              std::find(seen.begin(), seen.end(), y) == seen.end()) {
            seen.push_back(y);
            stack.push_back(y);
          }
        }
      }
      connected = seen.size() == nb.size();
    }
    if (!deg_ok || !connected ||
        inner_edges != static_cast<int>(nb.size()) - 1) {
      fail("vertex " + std::to_string(v) +
           ": neighborhood does not induce a path");
    }
  }

  // 2-degeneracy by repeated minimum-degree deletion.
  std::vector<int> deg(n + 1);
  std::vector<char> gone(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (!gone[v] && (best == 0 || deg[v] < deg[best])) best = v;
    }
    if (deg[best] > 2) {
      fail("not 2-degenerate: after " + std::to_string(step) +
           " deletions the minimum degree is " + std::to_string(deg[best]));
      break;
    }
    gone[best] = 1;
    for (Vertex y : g.neighbors(best)) {
      if (!gone[y]) --deg[y];
    }
  }
  return rep;
}

namespace detail {

/// Outer edges of a MOP are exactly those whose endpoints share one
/// neighbor; chords share two.
inline std::vector<int> common_neighbor_counts(const Graph& g) {
  std::vector<int> cnt(g.size());
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    int c = 0;
    for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++c;
        ++i;
        ++j;
      }
    }
    cnt[id] = c;
  }
  return cnt;
}

}  // namespace detail

/// The unique Hamiltonian cycle of a MOP, built from the outer edges.
/// Starts at vertex 1 and continues to the smaller outer neighbor of 1.
inline std::vector<Vertex> hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw NotMop("hamiltonian cycle needs n >= 3");
  auto cnt = detail::common_neighbor_counts(g);
  std::vector<std::array<Vertex, 2>> outer(n + 1, {0, 0});
  std::vector<int> outer_deg(n + 1, 0);
  for (int id = 0; id < g.size(); ++id) {
    if (cnt[id] != 1) continue;
    for (auto [a, b] : {std::pair{g.edge(id).u, g.edge(id).v},
                        std::pair{g.edge(id).v, g.edge(id).u}}) {
      if (outer_deg[a] >= 2) throw NotMop("vertex " + std::to_string(a) +
                                          " has more than two outer edges");
      outer[a][outer_deg[a]++] = b;
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (outer_deg[v] != 2) {
      throw NotMop("vertex " + std::to_string(v) + " has " +
                   std::to_string(outer_deg[v]) + " outer edges");
    }
  }
  std::vector<Vertex> cyc{1};
  Vertex prev = 1;
  Vertex cur = std::min(outer[1][0], outer[1][1]);
  while (cur != 1) {
    if (static_cast<int>(cyc.size()) >= n) {
      throw NotMop("outer edges do not form a single cycle");
    }
    cyc.push_back(cur);
    Vertex next = outer[cur][0] == prev ? outer[cur][1] : outer[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(cyc.size()) != n) {
    throw NotMop("outer edges form a cycle of length " +
                 std::to_string(cyc.size()) + ", expected " +
                 std::to_string(n));
  }
  return cyc;
}

/// A validated maximal outerplanar graph together with its Hamiltonian cycle
/// and outer/chord classification. Immutable.
class MopGraph {
 public:
  /// Validates `g`; throws NotMop listing the first violation.
  explicit MopGraph(Graph g) : g_(std::move(g)) {
    auto rep = validate_mop(g_);
    if (!rep.ok) throw NotMop(rep.violations.front());
    cycle_ = hamiltonian_cycle(g_);
    pos_.assign(order() + 1, 0);
    for (int i = 0; i < order(); ++i) pos_[cycle_[i]] = i;
    kind_.resize(g_.size());
    chords_ = 0;
    for (int id = 0; id < g_.size(); ++id) {
      const Edge& e = g_.edge(id);
      int gap = std::abs(pos_[e.u] - pos_[e.v]);
      bool outer = gap == 1 || gap == order() - 1;
      kind_[id] = outer ? EdgeKind::outer : EdgeKind::chord;
      if (!outer) ++chords_;
    }
  }

  const Graph& graph() const noexcept { return g_; }
  int order() const noexcept { return g_.order(); }
  int size() const noexcept { return g_.size(); }
  int chord_count() const noexcept { return chords_; }

  const std::vector<Vertex>& ham_cycle() const noexcept { return cycle_; }
  int cycle_position(Vertex v) const { return pos_.at(v); }

  EdgeKind kind(int edge_id) const { return kind_.at(edge_id); }
  bool is_chord(Vertex a, Vertex b) const {
    auto id = g_.edge_id(a, b);
    return id && kind_[*id] == EdgeKind::chord;
  }

  /// Offset of `w` from `v` walking forward along the Hamiltonian cycle.
  int cycle_offset(Vertex v, Vertex w) const {
    return (pos_.at(w) - pos_.at(v) + order()) % order();
  }

  /// Neighbors of `v` in rotation order: from the outer neighbor that follows
  /// `v` on the cycle to the one that precedes it. This is the induced path
  /// on N(v), i.e. the path of the fan centered at `v`.
  std::vector<Vertex> fan_path(Vertex v) const {
    auto nb = g_.neighbors(v);
    std::vector<Vertex> out(nb.begin(), nb.end());
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
      return cycle_offset(v, a) < cycle_offset(v, b);
    });
    return out;
  }

 private:
  Graph g_;
  std::vector<Vertex> cycle_;
  std::vector<int> pos_;
  std::vector<EdgeKind> kind_;
  int chords_ = 0;
};

/// Builds the MOP described by a canonical representation. The exterior
/// face is tracked as a cyclic boundary list; a row whose pair is not
/// consecutive on it throws InvalidAttachment naming that row.
inline MopGraph from_canonical(const CanonicalMop& c) {
  const int n = c.order();
  std::vector<Vertex> next(n + 1, 0), prev(n + 1, 0);
  next[1] = 2, next[2] = 3, next[3] = 1;
  prev[1] = 3, prev[2] = 1, prev[3] = 2;
  std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}};
  if (c.row(3) != CanonicalMop::Row{1, 2}) {
    throw InvalidAttachment(3, "vertex 3 must attach to 1 and 2");
  }
  for (Vertex i = 4; i <= n; ++i) {
    Vertex a = c.low(i), b = c.high(i);
    if (next[a] == b) {
      // a -> i -> b
    } else if (next[b] == a) {
      std::swap(a, b);
    } else {
      bool is_edge = std::find(edges.begin(), edges.end(), Edge(a, b)) !=
                     edges.end();
      throw InvalidAttachment(
          i, "{" + std::to_string(c.low(i)) + "," + std::to_string(c.high(i)) +
                 (is_edge ? "} is not on the exterior face"
                          : "} is not an edge"));
    }
    next[a] = i, prev[i] = a;
    next[i] = b, prev[b] = i;
    edges.emplace_back(a, i);
    edges.emplace_back(b, i);
  }
  return MopGraph(Graph(n, std::move(edges)));
}

/// A canonical representation re-derived from a MOP by peeling degree-2
/// vertices (smallest label first). `relabel[old] = new`.
struct CanonicalForm {
  CanonicalMop canon;
  std::vector<Vertex> relabel;
};

inline CanonicalForm canonical_form(const MopGraph& m) {
  const Graph& g = m.graph();
  const int n = g.order();
  std::vector<int> deg(n + 1);
  std::vector<char> alive(n + 1, 1);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 2) ready.push(v);
  }
  struct Peel {
    Vertex v, a, b;
  };
  std::vector<Peel> peeled;
  int remaining = n;
  while (remaining > 3) {
    if (ready.empty()) throw NotMop("no degree-2 vertex to peel");
    Vertex v = ready.top();
    ready.pop();
    if (!alive[v] || deg[v] != 2) continue;
    Vertex nb[2];
    int k = 0;
    for (Vertex y : g.neighbors(v)) {
      if (alive[y]) nb[k++] = y;
    }
    alive[v] = 0;
    --remaining;
    peeled.push_back({v, nb[0], nb[1]});
    for (Vertex y : nb) {
      if (--deg[y] == 2) ready.push(y);
    }
  }
  std::vector<Vertex> relabel(n + 1, 0);
  Vertex label = 1;
  for (Vertex v = 1; v <= n; ++v) {
    if (alive[v]) relabel[v] = label++;
  }
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    relabel[it->v] = label++;
  }
  std::vector<CanonicalMop::Row> rows(n - 2);
  rows[0] = {1, 2};
  for (const Peel& p : peeled) {
    Vertex a = relabel[p.a], b = relabel[p.b];
    rows[relabel[p.v] - 3] = {std::min(a, b), std::max(a, b)};
  }
  return {CanonicalMop(n, std::move(rows)), std::move(relabel)};
}

/// Degrees in Hamiltonian-cycle order.
inline std::vector<int> hamiltonian_degree_sequence(const MopGraph& m) {
  std::vector<int> out;
  out.reserve(m.order());
  for (Vertex v : m.ham_cycle()) out.push_back(m.graph().degree(v));
  return out;
}

using Triangle = std::array<Vertex, 3>;

/// Inner triangular faces, each sorted, listed lexicographically. Every
/// triangle of a MOP is a face, so this is plain triangle enumeration.
inline std::vector<Triangle> triangles(const MopGraph& m) {
  const Graph& g = m.graph();
  std::vector<Triangle> out;
  for (const Edge& e : g.edges()) {
    for (Vertex w : g.common_neighbors(e.u, e.v)) {
      if (w > e.v) out.push_back({e.u, e.v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mop
