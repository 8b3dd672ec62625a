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

// Maximum cardinality search, maximal fans, and the central-cut-spine tree.

#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mop/core.hpp"
#include "mop/error.hpp"
#include "mop/farley.hpp"
#include "mop/graph.hpp"
#include "mop/metrics.hpp"

namespace mop {

/// `number[v]` is f(v) in 1..n; `sequence[i - 1]` is the vertex numbered i.
/// Reversing `sequence` gives a perfect elimination ordering.
struct SimplicialOrder {
  std::vector<int> number;
  std::vector<Vertex> sequence;
  std::vector<int> weight;  // neighbors numbered before v, by vertex
};

/// True when every vertex's earlier-numbered neighbors form a clique.
inline bool is_simplicial_construction(const Graph& g, const SimplicialOrder& o) {
  for (Vertex z = 1; z <= g.order(); ++z) {
    std::vector<Vertex> earlier;
    for (Vertex y : g.neighbors(z)) {
      if (o.number[y] < o.number[z]) earlier.push_back(y);
    }
    for (std::size_t i = 0; i < earlier.size(); ++i) {
      for (std::size_t j = i + 1; j < earlier.size(); ++j) {
        if (!g.adjacent(earlier[i], earlier[j])) return false;
      }
    }
  }
  return true;
}

/// Maximum cardinality search; ties in weight go to the smallest label.
/// Throws NotChordal when the order is not a simplicial construction order.
inline SimplicialOrder mcs(const Graph& g) {
  const int n = g.order();
  SimplicialOrder o;
  o.number.assign(n + 1, 0);
  o.weight.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    Vertex z = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (o.number[v] == 0 && (z == 0 || o.weight[v] > o.weight[z])) z = v;
    }
    o.number[z] = i;
    o.sequence.push_back(z);
    for (Vertex y : g.neighbors(z)) {
      if (o.number[y] == 0) ++o.weight[y];
    }
  }
  if (!is_simplicial_construction(g, o)) {
    throw NotChordal("maximum cardinality search order is not simplicial");
  }
  return o;
}

/// A center with its neighbors in rotation order (the fan's path).
struct FanStructure {
  Vertex center = 0;
  std::vector<Vertex> path;

  std::vector<Vertex> vertex_set() const {
    std::vector<Vertex> s = path;
    s.push_back(center);
    std::sort(s.begin(), s.end());
    return s;
  }
};

/// Closed-neighborhood fans not strictly contained in another; among equal
/// vertex sets the smallest center is kept. Sorted by center.
inline std::vector<FanStructure> maximal_fans(const MopGraph& m) {
  const Graph& g = m.graph();
  auto closed = [&](Vertex v) {
    std::vector<Vertex> s(g.neighbors(v).begin(), g.neighbors(v).end());
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
  };
  std::vector<FanStructure> out;
  for (Vertex v = 1; v <= m.order(); ++v) {
    if (g.degree(v) < 2) continue;
    auto nv = closed(v);
    bool keep = true;
    // N[v] inside N[u] forces u adjacent to v.
    for (Vertex u : g.neighbors(v)) {
      auto nu = closed(u);
      if (!std::includes(nu.begin(), nu.end(), nv.begin(), nv.end())) continue;
      if (nu.size() > nv.size() || u < v) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back({v, m.fan_path(v)});
  }
  return out;
}

enum class CcsKind { red, green };

struct CcsNode {
  CcsKind kind = CcsKind::red;
  std::vector<Vertex> realization;  // 1 vertex (red) or a contracted edge
  int level = 0;
  int parent = -1;
  std::vector<int> children;
};

/// Central-cut-spine. Node 0 is the root (red, the chosen center).
struct CcsTree {
  Vertex root_vertex = 0;
  int radius = 0;
  /// Radius <= 1: the tree is the root alone.
  bool degenerate = false;
  std::vector<CcsNode> nodes;
  /// BFS level of every vertex from the root vertex.
  std::vector<int> layer;
  /// BFS parent of every vertex (0 for the root vertex).
  std::vector<Vertex> bfs_parent;

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      if (nodes[i].children.empty()) out.push_back(i);
    }
    return out;
  }

  /// Node ids from the root down to `node`.
  std::vector<int> path_from_root(int node) const {
    std::vector<int> p;
    for (int x = node; x != -1; x = nodes.at(x).parent) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

namespace detail {

/// Maximal paths of G[layer], each walked from the end nearest the root
/// along the Hamiltonian cycle; segments sorted by that start.
inline std::vector<std::vector<Vertex>> layer_segments(
    const MopGraph& m, const std::vector<int>& layer, int i, Vertex root) {
  const Graph& g = m.graph();
  std::vector<Vertex> verts;
  for (Vertex v = 1; v <= m.order(); ++v) {
    if (layer[v] == i) verts.push_back(v);
  }
  auto inner = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (Vertex y : g.neighbors(v)) {
      if (layer[y] == i) nb.push_back(y);
    }
    return nb;
  };
  auto off = [&](Vertex v) { return m.cycle_offset(root, v); };
  std::set<Vertex> done;
  std::vector<std::vector<Vertex>> segs;
  for (Vertex v : verts) {
    if (done.count(v) || inner(v).size() > 1) continue;
    std::vector<Vertex> seg{v};
    done.insert(v);
    Vertex prev = 0, cur = v;
    while (true) {
      Vertex nxt = 0;
      for (Vertex y : inner(cur)) {
        if (y != prev) nxt = y;
      }
      if (nxt == 0 || done.count(nxt)) break;
      seg.push_back(nxt);
      done.insert(nxt);
      prev = cur;
      cur = nxt;
    }
    if (off(seg.back()) < off(seg.front())) std::reverse(seg.begin(), seg.end());
    segs.push_back(std::move(seg));
  }
  if (done.size() != verts.size()) {
    throw std::logic_error("BFS layer " + std::to_string(i) +
                           " is not a union of paths");
  }
  std::sort(segs.begin(), segs.end(), [&](const auto& a, const auto& b) {
    return off(a.front()) < off(b.front());
  });
  return segs;
}

}  // namespace detail

/// Builds the central-cut-spine of a MOP.
///
/// Root: a center of minimum degree (smallest label on ties). For each
/// layer i = 1..rad-1 of the BFS from the root, every chord of G inside
/// N_i becomes a green node (as does N_i itself when it is a single
/// edge). Vertices of N_{rad-1} with neighbors in N_rad that no green node
/// already covers become red nodes, except that consecutive ones joined by
/// a chord are contracted into one green node. A node's parent is the
/// first node met walking BFS parents down from the apex below it.
inline CcsTree build_ccs(const MopGraph& m) {
  const Graph& g = m.graph();
  const int n = m.order();
  auto ecc = farley_diam_rad_center(m);
  Vertex root = 0;
  for (Vertex c : ecc.center) {
    if (root == 0 || g.degree(c) < g.degree(root)) root = c;
  }
  CcsTree t;
  t.root_vertex = root;
  t.radius = ecc.ecc[root];
  auto bt = bfs(g, root);
  t.layer = bt.dist;
  t.bfs_parent = bt.parent;
  t.nodes.push_back({CcsKind::red, {root}, 0, -1, {}});
  if (t.radius <= 1) {
    t.degenerate = true;
    return t;
  }
  const int rad = t.radius;
  std::vector<std::vector<int>> nodes_at(n + 1);  // vertex -> node ids
  nodes_at[root].push_back(0);

  auto has_child = [&](Vertex v) {
    for (Vertex y : g.neighbors(v)) {
      if (t.layer[y] == t.layer[v] + 1) return true;
    }
    return false;
  };
  auto find_parent = [&](Vertex start, int below) {
    for (Vertex c = start; c != 0; c = t.bfs_parent[c]) {
      if (t.layer[c] >= below) continue;
      if (!nodes_at[c].empty()) return nodes_at[c].front();
    }
    return 0;
  };
  auto apex_below = [&](Vertex u, Vertex w) {
    for (Vertex z : g.common_neighbors(u, w)) {
      if (t.layer[z] == t.layer[u] - 1) return z;
    }
    return t.bfs_parent[std::min(u, w)];
  };
  auto add_node = [&](CcsKind kind, std::vector<Vertex> real, int level,
                      Vertex anchor) {
    std::sort(real.begin(), real.end());
    int parent = find_parent(anchor, level);
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({kind, real, level, parent, {}});
    t.nodes[parent].children.push_back(id);
    for (Vertex v : real) nodes_at[v].push_back(id);
  };

  for (int i = 1; i <= rad - 1; ++i) {
    auto segs = detail::layer_segments(m, t.layer, i, root);
    std::size_t count = 0;
    for (const auto& s : segs) count += s.size();
    if (count == 2 && segs.size() == 1) {
      Vertex u = segs[0][0], w = segs[0][1];
      add_node(CcsKind::green, {u, w}, i, apex_below(u, w));
      continue;
    }
    for (const auto& s : segs) {
      for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        Vertex u = s[k], w = s[k + 1];
        if (m.is_chord(u, w) && has_child(u) && has_child(w)) {
          add_node(CcsKind::green, {u, w}, i, apex_below(u, w));
        }
      }
    }
  }

  // Outermost step: fan centers in N_{rad-1} covering N_rad.
  auto segs = detail::layer_segments(m, t.layer, rad - 1, root);
  for (const auto& s : segs) {
    std::vector<Vertex> centers;
    for (Vertex v : s) {
      bool covered = false;
      for (int id : nodes_at[v]) {
        if (t.nodes[id].level == rad - 1) covered = true;
      }
      if (has_child(v) && !covered) centers.push_back(v);
    }
    for (std::size_t k = 0; k < centers.size(); ++k) {
      Vertex v = centers[k];
      if (k + 1 < centers.size() && m.is_chord(v, centers[k + 1])) {
        Vertex w = centers[k + 1];
        add_node(CcsKind::green, {v, w}, rad - 1, apex_below(v, w));
        ++k;
      } else {
        add_node(CcsKind::red, {v}, rad - 1, t.bfs_parent[v]);
      }
    }
  }
  return t;
}

/// Two edge-disjoint root paths realizing a CCS node.
struct PathPair {
  std::vector<Vertex> first;   // BFS path to the first realization vertex
  std::vector<Vertex> second;  // rerouted path to the other one
  int replaced = 0;            // shared edges rerouted through a triangle
};

namespace detail {

inline std::vector<Vertex> erase_loops(const std::vector<Vertex>& walk) {
  std::vector<Vertex> out;
  for (Vertex v : walk) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(v);
    }
  }
  return out;
}

inline std::set<Edge> path_edges(const std::vector<Vertex>& p) {
  std::set<Edge> s;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) s.insert(Edge(p[i], p[i + 1]));
  return s;
}

}  // namespace detail

/// For a red node: two edge-disjoint paths from the root vertex to it. For a
/// green node {u, w}: a path to the endpoint of larger degree (smaller
/// label on ties) and an edge-disjoint path to the other. The second path
/// starts as a BFS path; each edge it shares with the first is replaced by
/// the two other sides of a triangle on it, then loops are erased.
inline PathPair realize_paths(const MopGraph& m, const CcsTree& t, int node) {
  const Graph& g = m.graph();
  const CcsNode& nd = t.nodes.at(node);
  PathPair pp;
  if (node == 0) {
    pp.first = pp.second = {t.root_vertex};
    return pp;
  }
  Vertex a = nd.realization.front(), b = nd.realization.back();
  if (g.degree(b) > g.degree(a)) std::swap(a, b);
  auto tree_path = [&](Vertex v) {
    std::vector<Vertex> p;
    for (Vertex x = v; x != 0; x = t.bfs_parent[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
  };
  pp.first = tree_path(a);
  auto used = detail::path_edges(pp.first);
  auto base = tree_path(b);
  std::vector<Vertex> walk{base.front()};
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    Vertex x = base[i], y = base[i + 1];
    if (!used.count(Edge(x, y))) {
      walk.push_back(y);
      continue;
    }
    Vertex detour = 0;
    for (Vertex z : g.common_neighbors(x, y)) {
      if (!used.count(Edge(x, z)) && !used.count(Edge(z, y))) {
        detour = z;
        break;
      }
    }
    if (detour == 0) {
      throw std::logic_error("no triangle detour around shared edge {" +
                             std::to_string(x) + "," + std::to_string(y) + "}");
    }
    walk.push_back(detour);
    walk.push_back(y);
    ++pp.replaced;
  }
  pp.second = detail::erase_loops(walk);
  for (const Edge& e : detail::path_edges(pp.second)) {
    if (used.count(e)) throw std::logic_error("realized paths share an edge");
  }
  return pp;
}

/// Indented text rendering, one node per line.
inline std::string ccs_text(const CcsTree& t) {
  std::ostringstream os;
  os << "root: " << t.root_vertex << "\nradius: " << t.radius << "\n";
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const CcsNode& nd = t.nodes[id];
    os << std::string(2 * depth, ' ') << (nd.kind == CcsKind::red ? "red " : "green ");
    for (std::size_t k = 0; k < nd.realization.size(); ++k) {
      os << (k ? "-" : "") << nd.realization[k];
    }
    os << " level " << nd.level << "\n";
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) {
      stack.push_back({*it, depth + 1});
    }
  }
  return os.str();
}

/// Graphviz rendering: red and green filled nodes.
inline std::string ccs_dot(const CcsTree& t) {
  std::ostringstream os;
  os << "graph ccs {\n  node [style=filled, fontcolor=white];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const CcsNode& nd = t.nodes[i];
    os << "  n" << i << " [label=\"";
    for (std::size_t k = 0; k < nd.realization.size(); ++k) {
      os << (k ? "-" : "") << nd.realization[k];
    }
    os << "\", fillcolor=" << (nd.kind == CcsKind::red ? "red" : "green")
       << "];\n";
  }
  for (std::size_t i = 1; i < t.nodes.size(); ++i) {
    os << "  n" << t.nodes[i].parent << " -- n" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mop
