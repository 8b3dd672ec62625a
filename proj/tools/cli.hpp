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


// Command-line front end. `run` holds all logic so tests can drive it
// without spawning processes.

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mop.hpp"

namespace moptool {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kScaleLimit = 3 };

class InputError : public mop::Error {
 public:
  using mop::Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

inline mop::Graph load_graph(const std::string& path) {
  auto in = mop::parse_any(read_file(path));
  if (auto* c = std::get_if<mop::CanonicalMop>(&in)) {
    return mop::from_canonical(*c).graph();
  }
  return std::get<mop::Graph>(in);
}

inline mop::MopGraph load_mop(const std::string& path) {
  auto in = mop::parse_any(read_file(path));
  if (auto* c = std::get_if<mop::CanonicalMop>(&in)) return mop::from_canonical(*c);
  return mop::MopGraph(std::get<mop::Graph>(in));
}

inline std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? " " : "") + std::to_string(xs[i]);
  }
  return s;
}

struct Options {
  std::string family;
  int param = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string coloring_out;
  std::string input;
  std::string coloring_in;
  bool dot = false;
  bool strong = false;
  int max_n = 200;
  int max_colors = 32;
  std::optional<int> timeout_s;
  int k_max = 12;
  std::vector<int> n_list{10, 20, 40, 60};
  int trials = 3;
};

inline int cmd_gen(const Options& o, std::ostream& out) {
  mop::GeneratedInstance inst = [&] {
    if (o.family == "fan") return mop::fan(o.param);
    if (o.family == "lad") return mop::lad(o.param);
    if (o.family == "lad_plus") return mop::lad_plus(o.param);
    if (!o.seed) throw InputError("gen random needs --seed");
    return mop::random_instance(o.param, *o.seed);
  }();
  std::string text = mop::write_mop(inst.canon);
  std::string ctext;
  if (inst.coloring) ctext = mop::write_coloring(inst.graph.graph(), *inst.coloring);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
  if (!ctext.empty()) {
    std::string cpath = !o.coloring_out.empty() ? o.coloring_out
                        : !o.out.empty()        ? o.out + ".coloring"
                                                : "";
    if (!cpath.empty()) write_file(cpath, ctext);
  }
  return kOk;
}

inline int cmd_info(const Options& o, std::ostream& out) {
  mop::MopGraph m = load_mop(o.input);
  auto ecc = mop::farley_diam_rad_center(m);
  auto t = mop::build_ccs(m);
  std::vector<int> sizes;
  for (const auto& l : mop::layers(m.graph(), t.root_vertex)) {
    sizes.push_back(static_cast<int>(l.size()));
  }
  out << "n: " << m.order() << "\n"
      << "edges: " << m.size() << "\n"
      << "chords: " << m.chord_count() << "\n"
      << "triangles: " << mop::triangles(m).size() << "\n"
      << "diam: " << ecc.diam << "\n"
      << "rad: " << ecc.rad << "\n"
      << "center: " << join(ecc.center) << "\n"
      << "root: " << t.root_vertex << "\n"
      << "layers: " << join(sizes) << "\n";
  return kOk;
}

inline int cmd_ccs(const Options& o, std::ostream& out) {
  auto t = mop::build_ccs(load_mop(o.input));
  out << (o.dot ? mop::ccs_dot(t) : mop::ccs_text(t));
  return kOk;
}

inline int cmd_color(const Options& o, std::ostream& out) {
  mop::MopGraph m = load_mop(o.input);
  auto rc = mop::rainbow_color(m);
  std::string text = o.dot ? mop::coloring_dot(m.graph(), rc.coloring)
                           : mop::write_coloring(m.graph(), rc.coloring);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  mop::Graph g = load_graph(o.input);
  mop::EdgeColoring c = mop::parse_coloring(read_file(o.coloring_in), g);
  mop::OracleLimits lim{o.max_n, o.max_colors};
  auto rep = o.strong ? mop::is_strong_rainbow_connected(g, c, lim)
                      : mop::is_rainbow_connected(g, c, lim);
  if (rep.ok) {
    out << "OK\n";
    return kOk;
  }
  out << "FAIL " << rep.counterexample->first << " " << rep.counterexample->second
      << "\n";
  return kVerifyFailed;
}

inline int cmd_rc(const Options& o, std::ostream& out) {
  mop::Graph g = load_graph(o.input);
  mop::ExactOptions opt;
  opt.limits = {o.max_n, o.max_colors};
  if (o.timeout_s) {
    opt.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(*o.timeout_s);
  }
  auto r = o.strong ? mop::exact_src(g, o.k_max, opt) : mop::exact_rc(g, o.k_max, opt);
  out << r.value << "\n";
  if (!o.out.empty()) write_file(o.out, mop::write_coloring(g, r.certificate));
  return kOk;
}

/// One CSV row: n,diam,rad,alg3_colors,bound_3rad,exact_rc,millis.
inline void bench_row(const mop::MopGraph& m, const Options& o, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  auto ecc = mop::farley_diam_rad_center(m);
  auto rc = mop::rainbow_color(m);
  std::string exact;
  mop::ExactOptions opt;
  opt.limits = {o.max_n, o.max_colors};
  if (m.size() <= opt.max_edges) {
    opt.deadline = start + std::chrono::seconds(o.timeout_s.value_or(10));
    try {
      exact = std::to_string(mop::exact_rc(m.graph(), rc.stats.colors_used, opt).value);
    } catch (const mop::Exhausted&) {
    } catch (const mop::ScaleLimit&) {
    }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  out << m.order() << "," << ecc.diam << "," << ecc.rad << ","
      << rc.stats.colors_used << "," << rc.stats.palette_bound << "," << exact
      << "," << ms << "\n";
}

inline int cmd_bench(const Options& o, std::ostream& out) {
  out << "n,diam,rad,alg3_colors,bound_3rad,exact_rc,millis\n";
  for (int d = 2; d <= 6; ++d) bench_row(mop::lad(d).graph, o, out);
  bench_row(mop::fan(7).graph, o, out);
  std::mt19937_64 seeds(o.seed.value_or(1));
  for (int n : o.n_list) {
    for (int k = 0; k < o.trials; ++k) {
      bench_row(mop::random_instance(n, seeds()).graph, o, out);
    }
  }
  return kOk;
}

/// Runs the tool on `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal outerplanar graphs: generation, spines, rainbow colorings",
               "moptool"};
  app.require_subcommand(1);
  Options o;
  auto add_caps = [&](CLI::App* c) {
    c->add_option("--max-n", o.max_n, "Oracle vertex cap")->check(CLI::PositiveNumber);
    c->add_option("--max-colors", o.max_colors, "Oracle color cap")
        ->check(CLI::Range(1, 32));
  };

  auto* gen = app.add_subcommand("gen", "Generate a MOP (and its coloring for named families)");
  gen->add_option("family", o.family, "fan | lad | lad_plus | random")
      ->required()
      ->check(CLI::IsMember({"fan", "lad", "lad_plus", "random"}));
  gen->add_option("param", o.param, "n for fan and random, d for lad and lad_plus")
      ->required();
  gen->add_option("--seed", o.seed, "PRNG seed (random family)");
  gen->add_option("--out", o.out, "MOP output path (default stdout)");
  gen->add_option("--coloring", o.coloring_out,
                  "Coloring output path (default <out>.coloring)");

  auto* info = app.add_subcommand("info", "Print size, diameter, radius, center, layers");
  info->add_option("input", o.input, "MOP or GRAPH file")->required();

  auto* ccs = app.add_subcommand("ccs", "Print the central-cut-spine");
  ccs->add_option("input", o.input, "MOP or GRAPH file")->required();
  ccs->add_flag("--dot", o.dot, "Emit Graphviz");

  auto* color = app.add_subcommand("color", "Rainbow-color a MOP with at most 3 rad colors");
  color->add_option("input", o.input, "MOP or GRAPH file")->required();
  color->add_option("--out", o.out, "Output path (default stdout)");
  color->add_flag("--dot", o.dot, "Emit Graphviz instead of the coloring format");

  auto* verify = app.add_subcommand("verify", "Check that a coloring is rainbow connected");
  verify->add_option("input", o.input, "MOP or GRAPH file")->required();
  verify->add_option("coloring", o.coloring_in, "COLORING file")->required();
  verify->add_flag("--strong", o.strong, "Require rainbow shortest paths");
  add_caps(verify);

  auto* rc = app.add_subcommand("rc", "Exact rainbow connection number");
  rc->add_option("input", o.input, "MOP or GRAPH file")->required();
  rc->add_option("--out", o.out, "Write the certificate coloring here");
  rc->add_option("--k-max", o.k_max, "Largest k to try")->check(CLI::PositiveNumber);
  rc->add_option("--timeout-s", o.timeout_s,
                 "Search time limit; required above 22 edges")
      ->check(CLI::PositiveNumber);
  rc->add_flag("--strong", o.strong, "Strong rainbow connection number");
  add_caps(rc);

  auto* bench = app.add_subcommand("bench", "CSV comparison of colors used and bounds");
  bench->add_option("--n-list", o.n_list, "Random MOP sizes")->delimiter(',');
  bench->add_option("--trials", o.trials, "Random MOPs per size")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", o.seed, "PRNG seed (default 1)");
  bench->add_option("--timeout-s", o.timeout_s, "Exact search limit per row (default 10)")
      ->check(CLI::PositiveNumber);
  add_caps(bench);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (info->parsed()) return cmd_info(o, out);
    if (ccs->parsed()) return cmd_ccs(o, out);
    if (color->parsed()) return cmd_color(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (rc->parsed()) return cmd_rc(o, out);
    return cmd_bench(o, out);
  } catch (const mop::ScaleLimit& e) {
    err << "scale limit: " << e.what() << "\n";
    return kScaleLimit;
  } catch (const mop::Exhausted& e) {
    err << (e.timed_out() ? "timeout: " : "exhausted: ") << e.what() << "\n";
    return e.timed_out() ? kScaleLimit : kVerifyFailed;
  } catch (const mop::Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace moptool
