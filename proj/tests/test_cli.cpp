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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = moptool::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("moptool_" + std::string(::testing::UnitTest::GetInstance()
                                         ->current_test_info()
                                         ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }
  fs::path dir_;
};

TEST_F(Cli, GenLadWritesMopAndColoring) {
  auto r = run({"gen", "lad", "5", "--out", path("l5.mop")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string mop = moptool::read_file(path("l5.mop"));
  EXPECT_EQ(mop.rfind("MOP 10\n", 0), 0u);
  std::string col = moptool::read_file(path("l5.mop.coloring"));
  EXPECT_EQ(col.rfind("COLORING 10 5\n", 0), 0u);
  auto v = run({"verify", path("l5.mop"), path("l5.mop.coloring"), "--strong"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "OK\n");
}

TEST_F(Cli, GenFanAndRandom) {
  auto f = run({"gen", "fan", "7", "--out", path("f.mop"), "--coloring", path("f.col")});
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(moptool::read_file(path("f.col")).rfind("COLORING 8 3\n", 0), 0u);
  auto a = run({"gen", "random", "40", "--seed", "7"});
  auto b = run({"gen", "random", "40", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("MOP 40\n", 0), 0u);
  EXPECT_EQ(run({"gen", "random", "40"}).code, 2);
  EXPECT_EQ(run({"gen", "lad", "1"}).code, 2);
  EXPECT_EQ(run({"gen", "cube", "3"}).code, 2);
}

TEST_F(Cli, Info) {
  run({"gen", "lad", "4", "--out", path("l4.mop")});
  auto r = run({"info", path("l4.mop")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n: 8\n"), std::string::npos);
  EXPECT_NE(r.out.find("edges: 13\n"), std::string::npos);
  EXPECT_NE(r.out.find("chords: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("triangles: 6\n"), std::string::npos);
  EXPECT_NE(r.out.find("diam: 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("rad: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("layers: "), std::string::npos);
}

TEST_F(Cli, ColorThenVerify) {
  run({"gen", "random", "30", "--seed", "3", "--out", path("r.mop")});
  auto c = run({"color", path("r.mop"), "--out", path("r.col")});
  ASSERT_EQ(c.code, 0) << c.err;
  auto v = run({"verify", path("r.mop"), path("r.col")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "OK\n");
  auto d = run({"color", path("r.mop"), "--dot"});
  EXPECT_EQ(d.out.rfind("graph coloring {", 0), 0u);
  auto again = run({"color", path("r.mop")});
  EXPECT_EQ(again.out, moptool::read_file(path("r.col")));
}

TEST_F(Cli, VerifyReportsFailure) {
  write("p3.graph", "GRAPH 3 2\n1 2\n2 3\n");
  write("p3.col", "COLORING 3 1\n1 2 1\n2 3 1\n");
  auto v = run({"verify", path("p3.graph"), path("p3.col")});
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(v.out, "FAIL 1 3\n");
}

TEST_F(Cli, Ccs) {
  run({"gen", "lad", "4", "--out", path("l4.mop")});
  auto t = run({"ccs", path("l4.mop")});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.out.rfind("root: ", 0), 0u);
  auto d = run({"ccs", path("l4.mop"), "--dot"});
  EXPECT_EQ(d.out.rfind("graph ccs {", 0), 0u);
}

TEST_F(Cli, ExactOnCycle) {
  write("c5.graph", "GRAPH 5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  auto r = run({"rc", path("c5.graph"), "--out", path("c5.col")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3\n");
  auto v = run({"verify", path("c5.graph"), path("c5.col")});
  EXPECT_EQ(v.out, "OK\n");
  EXPECT_EQ(run({"rc", path("c5.graph"), "--k-max", "2"}).code, 1);
}

TEST_F(Cli, InputErrorsAndLimits) {
  write("bad.mop", "MOP 4\n3 1 2\n3 1 2\n");
  auto r = run({"info", path("bad.mop")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  write("k4.graph", "GRAPH 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  EXPECT_EQ(run({"info", path("k4.graph")}).code, 2);
  EXPECT_EQ(run({"info", path("missing.mop")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  run({"gen", "random", "30", "--seed", "1", "--out", path("r.mop")});
  run({"color", path("r.mop"), "--out", path("r.col")});
  EXPECT_EQ(run({"verify", path("r.mop"), path("r.col"), "--max-n", "10"}).code, 3);
  EXPECT_EQ(run({"rc", path("r.mop")}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, BenchCsv) {
  auto r = run({"bench", "--n-list", "10", "--trials", "2", "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,diam,rad,alg3_colors,bound_3rad,exact_rc,millis");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string x;
    while (std::getline(ss, x, ',')) f.push_back(x);
    ASSERT_GE(f.size(), 6u) << line;
    EXPECT_LE(std::stoi(f[3]), std::stoi(f[4]));
    if (rows <= 5) { EXPECT_EQ(f[5], f[1]) << line; }  // lad(d): exact = d
    if (rows == 6) {
      EXPECT_EQ(f[3], "3");
      EXPECT_EQ(f[5], "3");
    }
  }
  EXPECT_EQ(rows, 5 + 1 + 2);
}

}  // namespace
