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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mop/core.hpp"
#include "mop/edge_coloring.hpp"
#include "mop/error.hpp"

namespace mop {

enum class Family { fan, lad, lad_plus, random };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::fan: return "fan";
    case Family::lad: return "lad";
    case Family::lad_plus: return "lad_plus";
    case Family::random: return "random";
  }
  return "?";
}

/// A generated MOP plus, for the named families, a certified coloring and
/// the rainbow numbers it attains.
struct GeneratedInstance {
  CanonicalMop canon;
  MopGraph graph;
  std::optional<EdgeColoring> coloring;
  std::optional<int> claimed_rc;
  std::optional<int> claimed_src;
  Family family;
};

/// Fan_n = P_n joined with K_1: the center is vertex 1 and the path is
/// v_j = j + 1 for j = 1..n, so the Hamiltonian cycle is (1 2 ... n+1).
///
/// Coloring: n = 2 is K_3 in one color. For 3 <= n <= 6 spokes to the first
/// ceil(n/2) path vertices get color 1, the rest color 2, and path edges
/// alternate 1, 2. For n >= 7 spokes alternate 1, 2 by parity of j and all
/// path edges get color 3.
inline GeneratedInstance fan(int n) {
  if (n < 2) throw DomainError("fan: need n >= 2, got " + std::to_string(n));
  std::vector<CanonicalMop::Row> rows{{1, 2}};
  for (Vertex i = 4; i <= n + 1; ++i) rows.push_back({1, i - 1});
  CanonicalMop canon(n + 1, std::move(rows));
  MopGraph m = from_canonical(canon);
  const Graph& g = m.graph();

  int rc = n == 2 ? 1 : n <= 6 ? 2 : 3;
  EdgeColoring c = EdgeColoring::uncolored(g);
  auto vj = [](int j) { return j + 1; };
  for (int j = 1; j <= n; ++j) {
    int spoke = *g.edge_id(1, vj(j));
    if (n == 2) {
      c[spoke] = 1;
    } else if (n <= 6) {
      c[spoke] = j <= (n + 1) / 2 ? 1 : 2;
    } else {
      c[spoke] = j % 2 == 1 ? 1 : 2;
    }
    if (j < n) {
      int path = *g.edge_id(vj(j), vj(j + 1));
      c[path] = n == 2 ? 1 : n <= 6 ? (j % 2 == 1 ? 1 : 2) : 3;
    }
  }
  return {canon, std::move(m), std::move(c), rc, std::nullopt, Family::fan};
}

namespace detail {

/// Triangulated strip on 1..n: vertex i >= 4 attaches to {i-2, i-1}, so
/// d(1, i) = floor(i / 2). Both edges added with vertex i get color
/// floor(i / 2), the base triangle gets color 1.
inline GeneratedInstance strip(int n, int d, Family family) {
  std::vector<CanonicalMop::Row> rows{{1, 2}};
  for (Vertex i = 4; i <= n; ++i) rows.push_back({i - 2, i - 1});
  CanonicalMop canon(n, std::move(rows));
  MopGraph m = from_canonical(canon);
  EdgeColoring c = EdgeColoring::uncolored(m.graph());
  for (int id = 0; id < m.size(); ++id) {
    Vertex b = m.graph().edge(id).v;
    c[id] = b <= 3 ? 1 : b / 2;
  }
  return {canon, std::move(m), std::move(c), d, d, family};
}

}  // namespace detail

/// The minimum MOP of diameter d (2d vertices) with its d-coloring.
inline GeneratedInstance lad(int d) {
  if (d < 2) throw DomainError("lad: need d >= 2, got " + std::to_string(d));
  return detail::strip(2 * d, d, Family::lad);
}

/// lad(d) plus one vertex on {2d-1, 2d}; still diameter d.
inline GeneratedInstance lad_plus(int d) {
  if (d < 2) throw DomainError("lad_plus: need d >= 2, got " + std::to_string(d));
  return detail::strip(2 * d + 1, d, Family::lad_plus);
}

/// Unbiased integer in [0, bound) from a 64-bit Mersenne Twister, by
/// rejection. std::uniform_int_distribution output differs between
/// standard libraries; this does not.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Random MOP: start from K_3 and attach each new vertex to an exterior edge
/// chosen uniformly. The PRNG is std::mt19937_64 seeded with `seed`, drawn
/// through `uniform_below`; output depends only on (n, seed).
inline CanonicalMop random_mop(int n, std::uint64_t seed) {
  if (n < 3) throw DomainError("random_mop: need n >= 3, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<Vertex> boundary{1, 2, 3};
  std::vector<CanonicalMop::Row> rows{{1, 2}};
  for (Vertex i = 4; i <= n; ++i) {
    auto len = boundary.size();
    auto k = static_cast<std::size_t>(uniform_below(rng, len));
    Vertex a = boundary[k], b = boundary[(k + 1) % len];
    rows.push_back({std::min(a, b), std::max(a, b)});
    boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(k + 1), i);
  }
  return CanonicalMop(n, std::move(rows));
}

inline GeneratedInstance random_instance(int n, std::uint64_t seed) {
  CanonicalMop canon = random_mop(n, seed);
  MopGraph m = from_canonical(canon);
  return {canon, std::move(m), std::nullopt, std::nullopt, std::nullopt,
          Family::random};
}

}  // namespace mop
