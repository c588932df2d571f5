// Copyright 2026 The Harem Authors
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

#include "harem/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "harem/action.hpp"
#include "harem/amenability.hpp"
#include "harem/core_graph.hpp"
#include "harem/decomposition.hpp"
#include "harem/errors.hpp"
#include "harem/flow_matching.hpp"
#include "harem/harem_engine.hpp"

namespace harem {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Input problems detected after flag parsing.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_star(std::ostream& out, Index left, const IndexList& star) {
  out << left << " ->";
  for (Index r : star) out << " " << r;
  out << "\n";
}

HaremMatching read_matching(const std::string& text) {
  HaremMatching m;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Index left;
    std::string arrow;
    if (!(ls >> left >> arrow) || arrow != "->") {
      throw ParseError(line_no, "expected '<i> -> <j1> ...'");
    }
    IndexList star;
    Index r;
    while (ls >> r) star.push_back(r);
    if (!ls.eof()) throw ParseError(line_no, "bad right index");
    std::sort(star.begin(), star.end());
    m.stars[left] = std::move(star);
  }
  return m;
}

// "a..b" (half-open) or "b" meaning 0..b.
std::pair<Index, Index> parse_window(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {0, std::stoull(text)};
    Index lo = std::stoull(text.substr(0, dots));
    Index hi = std::stoull(text.substr(dots + 2));
    if (hi < lo) throw InputError("window end before start: " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("bad window '" + text + "'");
  }
}

ActionGraphSpec make_spec(const std::string& mode, std::uint64_t n) {
  if (mode == "tight") return ActionGraphSpec::tight(2);
  if (mode == "corollary") return ActionGraphSpec::corollary(2, n);
  throw InputError("unknown mode '" + mode + "'");
}

void print_report(std::ostream& out, const DecompositionReport& rep) {
  out << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checked << " points checked, "
      << rep.violations.size() << " violations)\n";
  for (const auto& v : rep.violations) out << "  " << v.describe() << "\n";
}

struct Options {
  // finite
  std::string file;
  unsigned k = 0;
  bool brute_check = false;
  // lazy
  std::string graph;
  std::optional<Index> left, right;
  std::string mode = "tight";
  std::uint64_t n = 1;
  std::size_t max_ball = EngineOptions{}.max_ball_size;
  // decompose / verify
  std::string group = "f2";
  std::string window;
  std::string out_format = "tsv";
  bool classic = false;
  std::string what;
  std::string tsv;
  std::string matching;
  std::uint64_t steps = 1;
  // wbt / folner
  unsigned rank = 2;
  std::string set;
  Index ground_radius = 2;
  std::size_t max_size = 5;
};

int cmd_finite(const Options& o, std::ostream& out, std::ostream& err) {
  std::string text = read_file(o.file);
  FiniteBipartiteGraph g = load_finite_graph_string(text);
  unsigned k = o.k ? o.k : read_k_header(text).value_or(1);
  MatchingRequest req = MatchingRequest::all_required(g, k);
  std::optional<HaremMatching> m = solve_harem(req);
  if (o.brute_check) {
    if (g.left_ids().size() > kBruteForceMaxLeft || g.right_ids().size() > kBruteForceMaxRight) {
      err << "brute-check skipped: graph exceeds the exhaustive-search limits\n";
    } else {
      auto all = brute_force_harem(req);
      bool agree = all.empty() ? !m.has_value() : (m && *m == all.front());
      if (!agree) {
        err << "brute-check FAILED: solver disagrees with exhaustive search\n";
        return kNegative;
      }
      err << "brute-check: agrees with exhaustive search (" << all.size()
          << " feasible matchings)\n";
    }
  }
  if (!m) {
    out << "INFEASIBLE\n";
    return kNegative;
  }
  for (const auto& [l, star] : m->stars) print_star(out, l, star);
  return kOk;
}

int cmd_lazy(const Options& o, std::ostream& out, std::ostream& err) {
  BipartiteOracle oracle;
  HWitness h = HWitness::identity();
  if (!o.file.empty()) {
    FiniteBipartiteGraph g = load_finite_graph_string(read_file(o.file));
    h = HWitness::vacuous(g.left_ids().size());
    oracle = as_oracle(std::move(g), o.file);
  } else if (o.graph == "f2") {
    oracle = build_action_graph(make_spec(o.mode, o.n));
  } else {
    throw InputError("unknown graph '" + o.graph + "'");
  }
  const unsigned k = o.k ? o.k : 2;
  HaremEngine engine(std::move(oracle), k, h, EngineOptions{o.max_ball});
  try {
    if (o.left) {
      if (!engine.oracle().has_vertex(Vertex{Side::kLeft, *o.left})) {
        throw InputError("no left vertex " + std::to_string(*o.left));
      }
      IndexList star = engine.match_left(*o.left);
      out << "L ";
      print_star(out, *o.left, star);
    } else {
      if (!engine.oracle().has_vertex(Vertex{Side::kRight, *o.right})) {
        throw InputError("no right vertex " + std::to_string(*o.right));
      }
      Index owner = engine.match_right(*o.right);
      out << "R " << *o.right << " -> " << owner << "\n";
    }
  } catch (const CEHHCViolation& e) {
    err << "CEHHCViolation: " << e.what() << "\n";
    return kNegative;
  } catch (const BallBudgetExceeded& e) {
    err << "BallBudgetExceeded: " << e.what() << "\n";
    return kNegative;
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.group != "f2") throw InputError("only --group f2 is supported");
  if (o.out_format != "tsv") throw InputError("only --out tsv is supported");
  auto [lo, hi] = parse_window(o.window);
  // Rows are buffered so a refused engine step leaves no partial table.
  std::ostringstream table;
  write_tsv_header(table);
  if (o.classic) {
    ClassicF2Decomp d;
    for (Index m = lo; m < hi; ++m) write_tsv_row(table, d.row(m));
  } else {
    ParadoxDecomp d(make_spec(o.mode, o.n), EngineOptions{o.max_ball});
    try {
      for (Index m = lo; m < hi; ++m) write_tsv_row(table, d.row(m));
    } catch (const BallBudgetExceeded& e) {
      err << "BallBudgetExceeded: " << e.what() << "\n";
      return kNegative;
    }
  }
  out << table.str();
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.what == "matching") {
    if (o.file.empty() || o.matching.empty()) {
      throw InputError("--what matching needs --file and --matching");
    }
    std::string text = read_file(o.file);
    FiniteBipartiteGraph g = load_finite_graph_string(text);
    unsigned k = o.k ? o.k : read_k_header(text).value_or(1);
    MatchingRequest req = MatchingRequest::all_required(std::move(g), k);
    MatchingReport rep = verify_matching(req, read_matching(read_file(o.matching)));
    out << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.violations.size() << " violations)\n";
    for (const auto& v : rep.violations) out << "  " << v.describe() << "\n";
    return rep.ok() ? kOk : kNegative;
  }
  if (o.what != "decomposition") throw InputError("unknown --what '" + o.what + "'");

  const Index window = o.window.empty() ? 10000 : parse_window(o.window).second;
  DecompositionReport rep;
  if (o.classic) {
    ClassicF2Decomp d;
    rep = verify_decomposition([&](Index m) { return d.theta1(m); },
                               [&](Index m) { return d.theta2(m); },
                               GeneratorSet::standard(2), window);
  } else if (!o.tsv.empty()) {
    std::ifstream in(o.tsv);
    if (!in) throw InputError("cannot read " + o.tsv);
    std::map<Index, DecompositionRow> rows;
    for (auto& r : read_decomposition_tsv(in, 2)) rows.emplace(r.index, std::move(r));
    auto lookup = [&](Index m) -> const DecompositionRow& {
      auto it = rows.find(m);
      if (it == rows.end()) {
        throw InputError("TSV has no row for index " + std::to_string(m) +
                         " needed by the verification window");
      }
      return it->second;
    };
    rep = verify_decomposition([&](Index m) { return lookup(m).theta1; },
                               [&](Index m) { return lookup(m).theta2; },
                               make_spec(o.mode, o.n).K, window);
  } else {
    ParadoxDecomp d(make_spec(o.mode, o.n), EngineOptions{o.max_ball});
    try {
      for (std::uint64_t s = 0; s < o.steps; ++s) d.engine().run_step();
    } catch (const BallBudgetExceeded& e) {
      err << "BallBudgetExceeded: " << e.what() << "\n";
      return kNegative;
    }
    rep = verify_committed(d);
  }
  print_report(out, rep);
  return rep.pass() ? kOk : kNegative;
}

int cmd_wbt(const Options& o, std::ostream& out) {
  auto result = wbt_free(parse_word_list(o.rank, o.set));
  if (!result) {
    out << "NOT-WITNESS\n";
    return kNegative;
  }
  out << "WITNESS " << format_word(result->first) << " " << format_word(result->second) << "\n";
  return kOk;
}

int cmd_folner(const Options& o, std::ostream& out) {
  std::vector<Word> K = parse_word_list(o.rank, o.set);
  IndexList ground = ball(GeneratorSet::standard(o.rank), 0, o.ground_radius);
  std::optional<IndexList> found;
  try {
    found = folner_search(K, o.n, ground, o.max_size);
  } catch (const SizeGuardError& e) {
    throw InputError(e.what());
  }
  if (!found) {
    out << "NONE\n";
    return kNegative;
  }
  Enumeration e(o.rank);
  std::vector<Word> words;
  for (Index i : *found) words.push_back(e.index_to_word(i));
  out << format_word_list(words) << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computable perfect (1,k)-matchings and paradoxical decompositions", "harem"};
  app.require_subcommand(1);
  Options o;

  auto* finite = app.add_subcommand("finite", "canonical perfect (1,k)-matching of a .bg graph");
  finite->add_option("file", o.file, ".bg graph file")->required();
  finite->add_option("--k", o.k, "star size (default: file header, else 1)");
  finite->add_flag("--brute-check", o.brute_check, "cross-check against exhaustive search");

  auto* lazy = app.add_subcommand("lazy", "query the lazily constructed matching");
  auto* g_opt = lazy->add_option("--graph", o.graph, "built-in graph (f2)");
  auto* f_opt = lazy->add_option("--file", o.file, ".bg graph driven with a vacuous witness");
  g_opt->excludes(f_opt);
  lazy->add_option("--k", o.k, "star size (default 2)");
  auto* l_opt = lazy->add_option("--left", o.left, "left vertex to match");
  auto* r_opt = lazy->add_option("--right", o.right, "right vertex to match");
  l_opt->excludes(r_opt);
  lazy->add_option("--mode", o.mode, "tight|corollary")->check(CLI::IsMember({"tight", "corollary"}));
  lazy->add_option("--n", o.n, "expansion parameter for corollary mode");
  lazy->add_option("--max-ball", o.max_ball, "largest ball a step may extract");

  auto* decompose = app.add_subcommand("decompose", "dump a paradoxical decomposition as TSV");
  decompose->add_option("--group", o.group, "group (f2)");
  decompose->add_option("--window", o.window, "index range a..b (half-open)")->required();
  decompose->add_option("--out", o.out_format, "output format (tsv)");
  decompose->add_flag("--classic", o.classic, "textbook decomposition instead of the engine");
  decompose->add_option("--mode", o.mode, "tight|corollary")->check(CLI::IsMember({"tight", "corollary"}));
  decompose->add_option("--n", o.n, "expansion parameter for corollary mode");
  decompose->add_option("--max-ball", o.max_ball, "largest ball a step may extract");

  auto* verify = app.add_subcommand("verify", "verify a decomposition or a matching");
  verify->add_option("--what", o.what, "decomposition|matching")
      ->required()
      ->check(CLI::IsMember({"decomposition", "matching"}));
  verify->add_option("--window", o.window, "check indices below N (or a..b: below b)");
  auto* c_opt = verify->add_flag("--classic", o.classic, "verify the textbook decomposition");
  auto* t_opt = verify->add_option("--tsv", o.tsv, "verify a TSV dump");
  c_opt->excludes(t_opt);
  verify->add_option("--steps", o.steps, "engine steps before checking the committed part");
  verify->add_option("--mode", o.mode, "tight|corollary")->check(CLI::IsMember({"tight", "corollary"}));
  verify->add_option("--n", o.n, "expansion parameter for corollary mode");
  verify->add_option("--max-ball", o.max_ball, "largest ball a step may extract");
  verify->add_option("--file", o.file, ".bg graph (matching)");
  verify->add_option("--k", o.k, "star size (matching)");
  verify->add_option("--matching", o.matching, "matching lines '<i> -> <j1> ...'");

  auto* wbt = app.add_subcommand("wbt", "Banach-Tarski witness test in a free group");
  wbt->add_option("--rank", o.rank, "free group rank")->required();
  wbt->add_option("--set", o.set, "comma-separated words")->required();

  auto* folner = app.add_subcommand("folner", "exhaustive Folner-set search in a ball");
  folner->add_option("--rank", o.rank, "free group rank")->required();
  folner->add_option("--set", o.set, "comma-separated words K")->required();
  folner->add_option("--n", o.n, "Folner parameter")->required();
  folner->add_option("--ground-radius", o.ground_radius, "radius of the ground ball")->required();
  folner->add_option("--max-size", o.max_size, "largest candidate set")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (finite->parsed()) return cmd_finite(o, out, err);
    if (lazy->parsed()) {
      if (o.graph.empty() == o.file.empty()) throw InputError("lazy needs --graph or --file");
      if (!o.left == !o.right) throw InputError("lazy needs --left or --right");
      return cmd_lazy(o, out, err);
    }
    if (decompose->parsed()) return cmd_decompose(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (wbt->parsed()) return cmd_wbt(o, out);
    if (folner->parsed()) return cmd_folner(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RankMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace harem
