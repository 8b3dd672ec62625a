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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mop.hpp"
#include "support.hpp"

namespace mop {
namespace {

CanonicalMop strip6() {
  return CanonicalMop(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

TEST(CanonicalMop, RejectsBadShape) {
  EXPECT_THROW(CanonicalMop(2, {}), DomainError);
  EXPECT_THROW(CanonicalMop(4, {{1, 2}}), DomainError);
  try {
    CanonicalMop(5, {{1, 2}, {1, 3}, {2, 5}});
    FAIL();
  } catch (const InvalidAttachment& e) {
    EXPECT_EQ(e.row(), 5);
  }
}

TEST(FromCanonical, StripOfSix) {
  MopGraph m = from_canonical(strip6());
  EXPECT_EQ(m.size(), 9);
  EXPECT_EQ(bfs(m.graph(), 1).dist[6], 3);
}

TEST(FromCanonical, RejectsNonExteriorAttachment) {
  // {2,3} is interior once 4 sits on it.
  try {
    from_canonical(CanonicalMop(5, {{1, 2}, {2, 3}, {2, 3}}));
    FAIL();
  } catch (const InvalidAttachment& e) {
    EXPECT_EQ(e.row(), 5);
    EXPECT_NE(std::string(e.what()).find("exterior"), std::string::npos);
  }
  try {
    from_canonical(CanonicalMop(5, {{1, 2}, {2, 3}, {1, 4}}));
    FAIL();
  } catch (const InvalidAttachment& e) {
    EXPECT_EQ(e.row(), 5);
    EXPECT_NE(std::string(e.what()).find("not an edge"), std::string::npos);
  }
}

TEST(ValidateMop, AcceptsAndRejects) {
  EXPECT_TRUE(validate_mop(complete_graph(3)).ok);
  EXPECT_FALSE(validate_mop(complete_graph(4)).ok);
  EXPECT_FALSE(validate_mop(complete_bipartite(2, 3)).ok);
  EXPECT_FALSE(validate_mop(cycle_graph(4)).ok);
  EXPECT_TRUE(validate_mop(fan(7).graph.graph()).ok);
  EXPECT_THROW(MopGraph(complete_graph(4)), NotMop);
}

TEST(ValidateMop, RejectsEveryChordDeletion) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    MopGraph m = from_canonical(random_mop(12, seed));
    for (int id = 0; id < m.size(); ++id) {
      if (m.kind(id) != EdgeKind::chord) continue;
      std::vector<int> drop{id};
      EXPECT_FALSE(validate_mop(m.graph().without_edges(drop)).ok);
    }
  }
}

TEST(ValidateMop, FanMatchesRecursiveConstruction) {
  // Fan_7 grown vertex by vertex on the exterior edge (center, last).
  std::vector<CanonicalMop::Row> rows{{1, 2}};
  for (Vertex i = 4; i <= 8; ++i) rows.push_back({1, i - 1});
  EXPECT_EQ(from_canonical(CanonicalMop(8, rows)).graph(), fan(7).graph.graph());
}

TEST(HamiltonianCycle, SmallCases) {
  EXPECT_EQ(hamiltonian_cycle(complete_graph(3)), (std::vector<Vertex>{1, 2, 3}));
  MopGraph m4 = from_canonical(CanonicalMop(4, {{1, 2}, {2, 3}}));
  EXPECT_EQ(m4.ham_cycle(), (std::vector<Vertex>{1, 2, 4, 3}));
  EXPECT_EQ(hamiltonian_degree_sequence(m4), (std::vector<int>{2, 3, 2, 3}));
  MopGraph f4 = fan(4).graph;
  EXPECT_EQ(f4.ham_cycle(), (std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_EQ(hamiltonian_degree_sequence(f4), (std::vector<int>{4, 2, 3, 3, 2}));
  EXPECT_THROW(hamiltonian_cycle(complete_graph(4)), NotMop);
}

TEST(HamiltonianCycle, UniqueByEnumeration) {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      MopGraph m = from_canonical(random_mop(n, seed));
      auto all = testing::hamiltonian_cycles(m.graph());
      ASSERT_EQ(all.size(), n == 3 ? 2u : 2u);
      EXPECT_TRUE(std::find(all.begin(), all.end(), m.ham_cycle()) != all.end());
      Vertex second = m.ham_cycle()[1];
      EXPECT_EQ(second, std::min(m.ham_cycle()[1], m.ham_cycle().back()));
      auto cn = m.graph();
      for (int id = 0; id < m.size(); ++id) {
        const Edge& e = cn.edge(id);
        auto common = cn.common_neighbors(e.u, e.v).size();
        EXPECT_EQ(common, m.kind(id) == EdgeKind::outer ? 1u : 2u);
      }
    }
  }
}

TEST(Triangles, SmallCases) {
  EXPECT_EQ(triangles(MopGraph(complete_graph(3))),
            (std::vector<Triangle>{{1, 2, 3}}));
  MopGraph m4 = from_canonical(CanonicalMop(4, {{1, 2}, {2, 3}}));
  EXPECT_EQ(triangles(m4), (std::vector<Triangle>{{1, 2, 3}, {2, 3, 4}}));
}

TEST(MopGraph, CountInvariants) {
  for (int n = 3; n <= 60; n += 3) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      MopGraph m = from_canonical(random_mop(n, seed));
      EXPECT_EQ(m.size(), 2 * n - 3);
      EXPECT_EQ(m.chord_count(), n - 3);
      EXPECT_EQ(static_cast<int>(triangles(m).size()), n - 2);
      auto seq = hamiltonian_degree_sequence(m);
      EXPECT_EQ(std::accumulate(seq.begin(), seq.end(), 0), 2 * (2 * n - 3));
    }
  }
}

TEST(MopGraph, FanPathIsInducedPath) {
  MopGraph m = from_canonical(random_mop(30, 3));
  for (Vertex v = 1; v <= m.order(); ++v) {
    auto p = m.fan_path(v);
    ASSERT_EQ(static_cast<int>(p.size()), m.graph().degree(v));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      EXPECT_TRUE(m.graph().adjacent(p[i], p[i + 1]));
    }
  }
}

TEST(CanonicalForm, RoundTripUnderRelabeling) {
  for (int n = 3; n <= 40; n += 7) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      MopGraph m = from_canonical(random_mop(n, seed));
      auto cf = canonical_form(m);
      MopGraph back = from_canonical(cf.canon);
      std::set<Edge> mapped;
      for (const Edge& e : m.graph().edges()) {
        mapped.insert(Edge(cf.relabel[e.u], cf.relabel[e.v]));
      }
      std::set<Edge> got(back.graph().edges().begin(), back.graph().edges().end());
      EXPECT_EQ(mapped, got);
    }
  }
}

}  // namespace
}  // namespace mop
