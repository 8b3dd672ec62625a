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


// Small edge cuts and the two-cut color property.

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mop/edge_coloring.hpp"
#include "mop/error.hpp"
#include "mop/graph.hpp"

namespace mop {

namespace detail {

inline bool disconnects(const Graph& g, const std::vector<int>& ids) {
  auto comp = component_labels(g.without_edges(ids));
  return std::any_of(comp.begin() + 1, comp.end(),
                     [&](int x) { return x != comp[1]; });
}

}  // namespace detail

/// All minimal edge cuts with at most `max_size` edges, each as sorted edge
/// ids, ordered by size then lexicographically. Subset enumeration; n <= 60.
inline std::vector<std::vector<int>> small_cut_enumeration(const Graph& g,
                                                           int max_size) {
  if (g.order() > 60) {
    throw ScaleLimit("cut enumeration is capped at 60 vertices, got " +
                     std::to_string(g.order()));
  }
  if (max_size < 1 || max_size > 3) {
    throw DomainError("cut size must be 1..3, got " + std::to_string(max_size));
  }
  std::vector<std::vector<int>> cuts;
  std::set<std::vector<int>> found;
  auto contains_cut = [&](const std::vector<int>& s) {
    // Cuts are upward closed, so checking subsets one smaller is enough.
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) sub.push_back(s[i]);
      }
      if (!sub.empty() && detail::disconnects(g, sub)) return true;
    }
    return false;
  };
  const int m = g.size();
  std::vector<int> cur;
  auto visit = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      if (detail::disconnects(g, cur) && !contains_cut(cur)) cuts.push_back(cur);
      return;
    }
    for (int id = start; id < m; ++id) {
      cur.push_back(id);
      self(self, id + 1, left - 1);
      cur.pop_back();
    }
  };
  for (int k = 1; k <= max_size; ++k) visit(visit, 0, k);
  return cuts;
}

/// If some pair u, w is separated both by removing s1 and by removing s2,
/// the edges of s1 and s2 together carry at least two colors. Returns
/// whether that implication holds. Throws NotACut unless s1 and s2 are
/// disjoint edge cuts.
inline bool disjoint_cut_property(const Graph& g, const EdgeColoring& c,
                                  const std::vector<int>& s1,
                                  const std::vector<int>& s2) {
  for (int id : s1) {
    if (std::find(s2.begin(), s2.end(), id) != s2.end()) {
      throw NotACut("edge sets are not disjoint");
    }
  }
  if (!detail::disconnects(g, s1)) throw NotACut("first edge set is not a cut");
  if (!detail::disconnects(g, s2)) throw NotACut("second edge set is not a cut");
  auto labels = [&](const std::vector<int>& s) {
    return component_labels(g.without_edges(s));
  };
  auto c1 = labels(s1), c2 = labels(s2);
  bool crossed = false;
  for (Vertex u = 1; u <= g.order() && !crossed; ++u) {
    for (Vertex w = u + 1; w <= g.order(); ++w) {
      if (c1[u] != c1[w] && c2[u] != c2[w]) {
        crossed = true;
        break;
      }
    }
  }
  if (!crossed) return true;
  std::set<int> colors;
  for (int id : s1) colors.insert(c[id]);
  for (int id : s2) colors.insert(c[id]);
  return colors.size() >= 2;
}

}  // namespace mop
