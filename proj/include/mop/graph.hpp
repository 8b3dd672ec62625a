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
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mop/error.hpp"

namespace mop {

/// Vertices are labeled 1..n throughout the library.
using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n.
///
/// Edges are kept sorted lexicographically and identified by their index in
/// that order; neighbor lists are sorted ascending. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws `Error` on self loops,
  /// duplicate edges, or endpoints outside 1..n.
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw Error("graph: negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u < 1 || e.v > n) {
        throw Error("graph: edge {" + std::to_string(e.u) + "," +
                    std::to_string(e.v) + "} out of range");
      }
      if (e.u == e.v) throw Error("graph: self loop at " + std::to_string(e.u));
      if (i > 0 && edges_[i - 1] == e) {
        throw Error("graph: duplicate edge {" + std::to_string(e.u) + "," +
                    std::to_string(e.v) + "}");
      }
    }
    adj_.assign(n_ + 1, {});
    adj_eid_.assign(n_ + 1, {});
    for (int id = 0; id < size(); ++id) {
      adj_[edges_[id].u].push_back(edges_[id].v);
      adj_[edges_[id].v].push_back(edges_[id].u);
    }
    for (Vertex v = 1; v <= n_; ++v) {
      auto& nb = adj_[v];
      std::sort(nb.begin(), nb.end());
      adj_eid_[v].resize(nb.size());
      for (std::size_t k = 0; k < nb.size(); ++k) {
        adj_eid_[v][k] = find_edge_slow(Edge(v, nb[k]));
      }
    }
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  /// Edge ids parallel to `neighbors(v)`.
  std::span<const int> incident_edges(Vertex v) const { return adj_eid_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  std::optional<int> edge_id(Vertex a, Vertex b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_) return std::nullopt;
    const auto& nb = adj_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return adj_eid_[a][it - nb.begin()];
  }

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  std::vector<Vertex> common_neighbors(Vertex a, Vertex b) const {
    std::vector<Vertex> out;
    std::set_intersection(adj_.at(a).begin(), adj_.at(a).end(),
                          adj_.at(b).begin(), adj_.at(b).end(),
                          std::back_inserter(out));
    return out;
  }

  /// Graph with the given edges removed (vertex set unchanged).
  Graph without_edges(std::span<const int> ids) const {
    std::vector<char> drop(edges_.size(), 0);
    for (int id : ids) drop.at(id) = 1;
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!drop[i]) kept.push_back(edges_[i]);
    }
    return Graph(n_, std::move(kept));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int find_edge_slow(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> adj_eid_;
};

/// Connected components, labels 0..k-1 indexed by vertex (index 0 unused,
/// set to -1). Vertices in `removed` get label -1 and are skipped.
inline std::vector<int> component_labels(const Graph& g,
                                         std::span<const char> removed = {}) {
  std::vector<int> comp(g.order() + 1, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (comp[s] != -1 || (!removed.empty() && removed[s])) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] == -1 && (removed.empty() || !removed[y])) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto comp = component_labels(g);
  return std::all_of(comp.begin() + 1, comp.end(),
                     [](int c) { return c == 0; });
}

/// Named small graphs used by tests, the CLI, and the exact-value tables.
inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return Graph(n, std::move(e));
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

}  // namespace mop
