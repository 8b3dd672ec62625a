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

// Text formats. All are ASCII, single-space separated, LF terminated:
//
//   MOP <n>                      GRAPH <n> <m>          COLORING <n> <used>
//   <i> <Low(i)> <High(i)>       <u> <v>                <u> <v> <color>
//   ... (i = 3..n ascending)     ... (m lines)          ... (u < v, sorted)

#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mop/core.hpp"
#include "mop/edge_coloring.hpp"
#include "mop/error.hpp"
#include "mop/graph.hpp"

namespace mop {
namespace detail {

struct Lines {
  std::vector<std::string_view> lines;

  explicit Lines(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
};

/// Splits on single spaces; rejects empty fields, tabs, and CR.
inline std::vector<std::string_view> fields(std::string_view line, int lineno) {
  std::vector<std::string_view> out;
  if (line.empty()) throw ParseError(lineno, "empty line");
  for (char ch : line) {
    if (ch == '\r') throw ParseError(lineno, "CR in line (LF endings only)");
    if (ch != ' ' && (ch < 0x21 || ch > 0x7e)) {
      throw ParseError(lineno, "non-printable character");
    }
  }
  std::size_t start = 0;
  while (true) {
    auto end = line.find(' ', start);
    auto tok = line.substr(start, end == std::string_view::npos
                                      ? std::string_view::npos
                                      : end - start);
    if (tok.empty()) throw ParseError(lineno, "fields must be single-space separated");
    out.push_back(tok);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

inline int to_int(std::string_view tok, int lineno) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size() || tok[0] == '+' ||
      tok[0] == '-') {
    throw ParseError(lineno, "expected a non-negative integer, got '" +
                                 std::string(tok) + "'");
  }
  return value;
}

inline void expect_fields(const std::vector<std::string_view>& f,
                          std::size_t count, int lineno) {
  if (f.size() != count) {
    throw ParseError(lineno, "expected " + std::to_string(count) +
                                 " fields, got " + std::to_string(f.size()));
  }
}

}  // namespace detail

inline std::string write_mop(const CanonicalMop& c) {
  std::string out = "MOP " + std::to_string(c.order()) + "\n";
  for (Vertex i = 3; i <= c.order(); ++i) {
    out += std::to_string(i) + " " + std::to_string(c.low(i)) + " " +
           std::to_string(c.high(i)) + "\n";
  }
  return out;
}

inline CanonicalMop parse_mop(std::string_view text) {
  detail::Lines ls(text);
  if (ls.lines.empty()) throw ParseError(1, "empty input");
  auto head = detail::fields(ls.lines[0], 1);
  detail::expect_fields(head, 2, 1);
  if (head[0] != "MOP") throw ParseError(1, "expected header 'MOP <n>'");
  int n = detail::to_int(head[1], 1);
  if (n < 3) throw ParseError(1, "n must be at least 3");
  if (static_cast<int>(ls.lines.size()) != n - 1) {
    throw ParseError(static_cast<int>(ls.lines.size()) + 1,
                     "expected " + std::to_string(n - 2) + " rows, got " +
                         std::to_string(ls.lines.size() - 1));
  }
  std::vector<CanonicalMop::Row> rows;
  for (int k = 1; k < static_cast<int>(ls.lines.size()); ++k) {
    int lineno = k + 1;
    auto f = detail::fields(ls.lines[k], lineno);
    detail::expect_fields(f, 3, lineno);
    int i = detail::to_int(f[0], lineno);
    int expected = k + 2;
    if (i != expected) {
      throw ParseError(lineno, i < expected ? "duplicate or out-of-order row " +
                                                  std::to_string(i)
                                            : "missing row " +
                                                  std::to_string(expected));
    }
    int lo = detail::to_int(f[1], lineno), hi = detail::to_int(f[2], lineno);
    if (!(1 <= lo && lo < hi && hi < i)) {
      throw ParseError(lineno, "need 1 <= Low < High < " + std::to_string(i));
    }
    rows.push_back({lo, hi});
  }
  return CanonicalMop(n, std::move(rows));
}

inline std::string write_graph(const Graph& g) {
  std::string out = "GRAPH " + std::to_string(g.order()) + " " +
                    std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

inline Graph parse_graph(std::string_view text) {
  detail::Lines ls(text);
  if (ls.lines.empty()) throw ParseError(1, "empty input");
  auto head = detail::fields(ls.lines[0], 1);
  detail::expect_fields(head, 3, 1);
  if (head[0] != "GRAPH") throw ParseError(1, "expected header 'GRAPH <n> <m>'");
  int n = detail::to_int(head[1], 1), m = detail::to_int(head[2], 1);
  if (static_cast<int>(ls.lines.size()) != m + 1) {
    throw ParseError(static_cast<int>(ls.lines.size()) + 1,
                     "expected " + std::to_string(m) + " edge lines");
  }
  std::vector<Edge> edges;
  for (int k = 1; k <= m; ++k) {
    auto f = detail::fields(ls.lines[k], k + 1);
    detail::expect_fields(f, 2, k + 1);
    int u = detail::to_int(f[0], k + 1), v = detail::to_int(f[1], k + 1);
    if (u < 1 || v < 1 || u > n || v > n || u == v) {
      throw ParseError(k + 1, "bad edge");
    }
    edges.emplace_back(u, v);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(1, e.what());
  }
}

/// Either a canonical MOP or a plain graph, decided by the header keyword.
using GraphInput = std::variant<CanonicalMop, Graph>;

inline GraphInput parse_any(std::string_view text) {
  if (text.starts_with("MOP")) return parse_mop(text);
  if (text.starts_with("GRAPH")) return parse_graph(text);
  throw ParseError(1, "unknown format (expected 'MOP' or 'GRAPH' header)");
}

inline std::string write_coloring(const Graph& g, const EdgeColoring& c) {
  std::string out = "COLORING " + std::to_string(g.order()) + " " +
                    std::to_string(c.colors_used()) + "\n";
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(c[id]) + "\n";
  }
  return out;
}

/// Parses a coloring and checks that it lists exactly the edges of `g`.
inline EdgeColoring parse_coloring(std::string_view text, const Graph& g) {
  detail::Lines ls(text);
  if (ls.lines.empty()) throw ParseError(1, "empty input");
  auto head = detail::fields(ls.lines[0], 1);
  detail::expect_fields(head, 3, 1);
  if (head[0] != "COLORING") {
    throw ParseError(1, "expected header 'COLORING <n> <colors_used>'");
  }
  int n = detail::to_int(head[1], 1), used = detail::to_int(head[2], 1);
  if (n != g.order()) {
    throw ParseError(1, "coloring is for n = " + std::to_string(n) +
                            ", graph has n = " + std::to_string(g.order()));
  }
  if (static_cast<int>(ls.lines.size()) != g.size() + 1) {
    throw ParseError(static_cast<int>(ls.lines.size()) + 1,
                     "expected " + std::to_string(g.size()) + " edge lines");
  }
  EdgeColoring c = EdgeColoring::uncolored(g);
  for (int id = 0; id < g.size(); ++id) {
    int lineno = id + 2;
    auto f = detail::fields(ls.lines[id + 1], lineno);
    detail::expect_fields(f, 3, lineno);
    Edge e{detail::to_int(f[0], lineno), detail::to_int(f[1], lineno)};
    if (e.u != detail::to_int(f[0], lineno) || e != g.edge(id)) {
      throw ParseError(lineno, "expected edge " + std::to_string(g.edge(id).u) +
                                   " " + std::to_string(g.edge(id).v));
    }
    int col = detail::to_int(f[2], lineno);
    if (col < 1) throw ParseError(lineno, "colors must be positive");
    c[id] = col;
  }
  if (c.colors_used() != used) {
    throw ParseError(1, "header says " + std::to_string(used) +
                            " colors, file uses " +
                            std::to_string(c.colors_used()));
  }
  return c;
}

/// Graphviz rendering of an edge coloring; edges are labeled with colors.
inline std::string coloring_dot(const Graph& g, const EdgeColoring& c) {
  std::ostringstream os;
  os << "graph coloring {\n  node [shape=circle];\n";
  for (Vertex v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
  for (int id = 0; id < g.size(); ++id) {
    os << "  " << g.edge(id).u << " -- " << g.edge(id).v << " [label=\""
       << c[id] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mop
