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


// Independent brute-force oracles for the test suites. Nothing here calls
// the library's own search code.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "mop.hpp"

namespace mop::testing {

/// Plain BFS distance matrix over an adjacency test (not the library BFS).
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
  for (int v = 1; v <= n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Some simple u-v path has pairwise distinct colors (exhaustive DFS).
inline bool has_rainbow_path_dfs(const Graph& g, const EdgeColoring& c, Vertex u,
                                 Vertex v) {
  std::vector<char> on(g.order() + 1, 0);
  std::multiset<int> used;
  std::function<bool(Vertex)> go = [&](Vertex x) {
    if (x == v) return true;
    on[x] = 1;
    auto nb = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (on[nb[k]] || used.count(c[ids[k]])) continue;
      used.insert(c[ids[k]]);
      bool ok = go(nb[k]);
      used.erase(used.find(c[ids[k]]));
      if (ok) {
        on[x] = 0;
        return true;
      }
    }
    on[x] = 0;
    return false;
  };
  return go(u);
}

inline bool rainbow_connected_dfs(const Graph& g, const EdgeColoring& c) {
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v)
      if (!has_rainbow_path_dfs(g, c, u, v)) return false;
  return true;
}

/// Every Hamiltonian cycle through vertex 1, each listed once per direction.
inline std::vector<std::vector<Vertex>> hamiltonian_cycles(const Graph& g) {
  std::vector<Vertex> rest(g.order() - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<std::vector<Vertex>> out;
  do {
    std::vector<Vertex> cyc{1};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    bool ok = true;
    for (std::size_t i = 0; i < cyc.size() && ok; ++i) {
      ok = g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    if (ok) out.push_back(cyc);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

/// Vertices of G - {s, t} reachable from w.
inline std::set<Vertex> side_of(const Graph& g, Vertex s, Vertex t, Vertex w) {
  std::set<Vertex> seen{w};
  std::vector<Vertex> stack{w};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (y != s && y != t && seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

/// Signed edge eccentricity from its definition: eccentricity of x in
/// G[S + {s, t}], negated when every farthest vertex is one step closer
/// to the other endpoint. Empty side: -1.
inline int signed_edge_ecc(const Graph& g, Vertex s, Vertex t, Vertex x,
                           const std::set<Vertex>& side) {
  if (side.empty()) return -1;
  std::vector<Vertex> keep(side.begin(), side.end());
  keep.push_back(s);
  keep.push_back(t);
  std::sort(keep.begin(), keep.end());
  std::map<Vertex, Vertex> idx;
  for (std::size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<Vertex>(i + 1);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (idx.count(e.u) && idx.count(e.v)) es.emplace_back(idx[e.u], idx[e.v]);
  }
  Graph h(static_cast<int>(keep.size()), es);
  auto d = floyd(h);
  Vertex other = x == s ? t : s;
  int ex = 0;
  for (std::size_t i = 1; i <= keep.size(); ++i) ex = std::max(ex, d[idx[x]][i]);
  bool closer = true;
  for (std::size_t i = 1; i <= keep.size(); ++i) {
    if (d[idx[x]][i] == ex && d[idx[other]][i] != ex - 1) closer = false;
  }
  return closer ? -ex : ex;
}

/// Labeled trees on n vertices via Pruefer codes, deduplicated up to
/// isomorphism by AHU canonical strings.
inline std::vector<Graph> unlabeled_trees(int n) {
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{1, 2}})};
  std::vector<Graph> out;
  std::set<std::string> seen;
  std::vector<int> code(n - 2, 1);
  while (true) {
    std::vector<int> deg(n + 1, 1);
    for (int x : code) ++deg[x];
    std::vector<Edge> es;
    for (int x : code) {
      for (int leaf = 1; leaf <= n; ++leaf) {
        if (deg[leaf] == 1) {
          es.emplace_back(leaf, x);
          --deg[leaf];
          --deg[x];
          break;
        }
      }
    }
    std::vector<int> last;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) last.push_back(v);
    es.emplace_back(last[0], last[1]);
    Graph g(n, es);
    std::function<std::string(Vertex, Vertex)> ahu = [&](Vertex v, Vertex p) {
      std::vector<std::string> kids;
      for (Vertex y : g.neighbors(v))
        if (y != p) kids.push_back(ahu(y, v));
      std::sort(kids.begin(), kids.end());
      std::string s = "(";
      for (auto& k : kids) s += k;
      return s + ")";
    };
    std::string best;
    for (Vertex r = 1; r <= n; ++r) {
      auto s = ahu(r, 0);
      if (best.empty() || s < best) best = s;
    }
    if (seen.insert(best).second) out.push_back(g);
    int i = n - 3;
    while (i >= 0 && code[i] == n) code[i--] = 1;
    if (i < 0) break;
    ++code[i];
  }
  return out;
}

/// Removing both vertices disconnects the graph.
inline bool is_vertex_cut(const Graph& g, Vertex a, Vertex b) {
  std::vector<char> removed(g.order() + 1, 0);
  removed[a] = removed[b] = 1;
  auto comp = component_labels(g, removed);
  int k = -1;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (removed[v]) continue;
    if (k == -1) k = comp[v];
    if (comp[v] != k) return true;
  }
  return false;
}

inline bool edge_disjoint(const std::vector<Vertex>& p, const std::vector<Vertex>& q) {
  std::set<Edge> a;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) a.insert(Edge(p[i], p[i + 1]));
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    if (a.count(Edge(q[i], q[i + 1]))) return false;
  return true;
}

inline bool is_path_in(const Graph& g, const std::vector<Vertex>& p) {
  std::set<Vertex> s(p.begin(), p.end());
  if (s.size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return true;
}

}  // namespace mop::testing
