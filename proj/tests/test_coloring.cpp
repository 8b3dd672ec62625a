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

#include <functional>
#include <set>

#include "mop.hpp"
#include "support.hpp"

namespace mop {
namespace {

TEST(Palette, BlocksAreDisjointAndSized) {
  for (int rad = 2; rad <= 12; ++rad) {
    ColorPalette p(rad);
    std::set<int> all;
    int count = 0;
    for (int k = 1; k <= rad; ++k) {
      for (int c : p.layer(k)) {
        all.insert(c);
        ++count;
      }
    }
    EXPECT_EQ(static_cast<int>(all.size()), count);
    EXPECT_EQ(count, 3 * rad);
    EXPECT_EQ(*all.rbegin(), 3 * rad);
    EXPECT_EQ(*all.begin(), 1);
    EXPECT_EQ(static_cast<int>(p.c1.size()), rad - 2);
    EXPECT_EQ(static_cast<int>(p.c2.size()), rad - 2);
    EXPECT_EQ(static_cast<int>(p.c3.size()), rad - 2);
  }
  EXPECT_THROW(ColorPalette(4).layer(5), PaletteExhausted);
}

TEST(RainbowColor, SmallRadiusFastPath) {
  auto k3 = rainbow_color(MopGraph(complete_graph(3)));
  EXPECT_EQ(k3.stats.colors_used, 1);
  auto f9 = rainbow_color(fan(9).graph);
  EXPECT_EQ(f9.stats.colors_used, 3);
  EXPECT_TRUE(is_rainbow_connected(fan(9).graph.graph(), f9.coloring).ok);
  EXPECT_TRUE(f9.ccs.degenerate);
}

TEST(RainbowColor, RootFanSpokesAlternate) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    MopGraph m = from_canonical(random_mop(25, seed));
    auto rc = rainbow_color(m);
    Vertex r = rc.ccs.root_vertex;
    auto path = m.fan_path(r);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      EXPECT_NE(rc.coloring.color(m.graph(), r, path[j]),
                rc.coloring.color(m.graph(), r, path[j + 1]));
    }
  }
}

void expect_good(const MopGraph& m) {
  auto rc = rainbow_color(m);
  auto e = ecc_diam_rad_center(m.graph());
  EXPECT_TRUE(rc.coloring.is_total());
  EXPECT_EQ(rc.stats.cleanup_edges, 0);
  EXPECT_LE(rc.stats.colors_used, 3 * e.rad);
  EXPECT_GE(rc.stats.colors_used, e.diam);
  EXPECT_EQ(rc.stats.palette_bound, 3 * e.rad);
  EXPECT_EQ(rc.stats.palette_bound, e.rad * eta(m));
  if (e.rad >= 2) { EXPECT_LE(rc.stats.excess_c, e.rad - 2); }
  EXPECT_TRUE(is_rainbow_connected(m.graph(), rc.coloring).ok);
}

TEST(RainbowColor, NamedFamilies) {
  for (int n = 2; n <= 12; ++n) expect_good(fan(n).graph);
  for (int d = 2; d <= 10; ++d) {
    expect_good(lad(d).graph);
    expect_good(lad_plus(d).graph);
  }
}

TEST(RainbowColor, RandomMops) {
  for (int n : {6, 15, 30, 60, 100}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      expect_good(from_canonical(random_mop(n, 100 * n + seed)));
    }
  }
}

TEST(RainbowColor, SmallGraphsAgreeWithPathEnumeration) {
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      MopGraph m = from_canonical(random_mop(n, seed));
      auto rc = rainbow_color(m);
      EXPECT_TRUE(testing::rainbow_connected_dfs(m.graph(), rc.coloring));
    }
  }
}

// Every construction sequence up to n vertices.
void each_mop(int n, const std::function<void(const MopGraph&)>& f) {
  std::function<void(std::vector<Vertex>, std::vector<CanonicalMop::Row>)> grow =
      [&](std::vector<Vertex> boundary, std::vector<CanonicalMop::Row> rows) {
        Vertex next = static_cast<Vertex>(rows.size()) + 3;
        if (next > n) {
          f(from_canonical(CanonicalMop(n, rows)));
          return;
        }
        for (std::size_t k = 0; k < boundary.size(); ++k) {
          Vertex a = boundary[k], b = boundary[(k + 1) % boundary.size()];
          auto nb = boundary;
          nb.insert(nb.begin() + static_cast<std::ptrdiff_t>(k + 1), next);
          auto nr = rows;
          nr.push_back({std::min(a, b), std::max(a, b)});
          grow(nb, nr);
        }
      };
  grow({1, 2, 3}, {{1, 2}});
}

TEST(RainbowColor, AllSmallMops) {
  int count = 0;
  for (int n = 3; n <= 8; ++n) {
    each_mop(n, [&](const MopGraph& m) {
      ++count;
      expect_good(m);
    });
  }
  EXPECT_EQ(count, 1 + 3 + 12 + 60 + 360 + 2520);
}

TEST(RainbowColor, Deterministic) {
  MopGraph m = from_canonical(random_mop(50, 3));
  EXPECT_EQ(rainbow_color(m).coloring, rainbow_color(m).coloring);
}

}  // namespace
}  // namespace mop
