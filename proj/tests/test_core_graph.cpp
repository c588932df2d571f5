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

#include "harem/core_graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "harem/decomposition.hpp"
#include "harem/errors.hpp"
#include "test_util.hpp"

namespace harem {
namespace {

using testing::random_graph;
using testing::reference_distances;

std::set<std::pair<Index, Index>> edge_set(const FiniteBipartiteGraph& g) {
  std::set<std::pair<Index, Index>> out;
  for (std::size_t p = 0; p < g.left_ids().size(); ++p) {
    for (Index r : g.adjacency_at(p)) out.emplace(g.left_ids()[p], r);
  }
  return out;
}

TEST(LoadFiniteGraph, ReadsLeftAndRightSets) {
  auto g = load_finite_graph_string("A 0: 0 1\nA 1: 1 2\n");
  EXPECT_EQ(g.left_ids(), (IndexList{0, 1}));
  EXPECT_EQ(g.right_ids(), (IndexList{0, 1, 2}));
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(LoadFiniteGraph, EmptyInput) {
  auto g = load_finite_graph_string("");
  EXPECT_TRUE(g.left_ids().empty());
  EXPECT_TRUE(g.right_ids().empty());
}

TEST(LoadFiniteGraph, CommentsBlanksAndHeader) {
  const std::string text = "# pigeons\n\nk 2\nA 3: 4 7\n  \nA 5:\n";
  auto g = load_finite_graph_string(text);
  EXPECT_EQ(g.left_ids(), (IndexList{3, 5}));
  EXPECT_EQ(g.right_ids(), (IndexList{4, 7}));
  EXPECT_TRUE(g.neighbors_of_left(5).empty());
  EXPECT_EQ(read_k_header(text), 2u);
  EXPECT_EQ(read_k_header("A 0: 1\n"), std::nullopt);
}

struct BadInput {
  const char* text;
  std::size_t line;
};

class LoadFiniteGraphErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(LoadFiniteGraphErrors, ReportsLine) {
  try {
    load_finite_graph_string(GetParam().text);
    FAIL() << "accepted: " << GetParam().text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, LoadFiniteGraphErrors,
    ::testing::Values(BadInput{"A 0: 1 1\n", 1}, BadInput{"A 0: 2 1\n", 1},
                      BadInput{"A 0: 1\nA 0: 2\n", 2},
                      BadInput{"A 1: 1\n# c\nA 0: 2\n", 3},
                      BadInput{"A 0 1 2\n", 1}, BadInput{"B 0: 1\n", 1},
                      BadInput{"A x: 1\n", 1}, BadInput{"A 0: 1 -2\n", 1},
                      BadInput{"A 0: 1\nk 2\n", 2}, BadInput{"k 0\n", 1}));

TEST(LoadFiniteGraph, DumpRoundTrip) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto g = random_graph(rng, 1 + t % 6, 1 + t % 9, 0.4);
    // Rights without edges do not survive serialization.
    auto back = load_finite_graph_string(dump_finite_graph(g, 3));
    EXPECT_EQ(edge_set(back), edge_set(g));
    EXPECT_EQ(back.left_ids(), g.left_ids());
    EXPECT_EQ(dump_finite_graph(back), dump_finite_graph(g));
  }
}

TEST(FromRows, RejectsBadRows) {
  EXPECT_THROW(FiniteBipartiteGraph::from_rows({{0, {1}}, {0, {2}}}),
               std::invalid_argument);
  EXPECT_THROW(FiniteBipartiteGraph::from_rows({{0, {2, 1}}}), std::invalid_argument);
}

TEST(AsOracle, NeighborsAndDegrees) {
  auto g = load_finite_graph_string("A 0: 0 1\nA 2: 1\n");
  auto o = as_oracle(g);
  EXPECT_EQ(o.neighbors({Side::kRight, 1}), (IndexList{0, 2}));
  EXPECT_EQ(o.degree({Side::kLeft, 0}), 2u);
  EXPECT_FALSE(o.has_vertex({Side::kLeft, 1}));
  EXPECT_EQ(o.index_bound(Side::kLeft), 3u);
  EXPECT_EQ(o.index_bound(Side::kRight), 2u);
  EXPECT_TRUE(check_symmetry(o, 10).empty());
  EXPECT_TRUE(check_degrees(o, 10).empty());
}

BipartiteOracle planted_asymmetry() {
  BipartiteOracle o;
  o.name = "planted";
  // Complete on {0..5} x {0..5} except that right 5 forgets left 3.
  o.neighbors = [](const Vertex& v) {
    IndexList out;
    if (v.index > 5) return out;
    for (Index i = 0; i <= 5; ++i) {
      if (v.side == Side::kRight && v.index == 5 && i == 3) continue;
      out.push_back(i);
    }
    return out;
  };
  o.degree = [o](const Vertex& v) { return o.neighbors(v).size(); };
  return o;
}

TEST(CheckSymmetry, FindsPlantedDefect) {
  auto bad = check_symmetry(planted_asymmetry(), 8);
  EXPECT_EQ(bad, (std::vector<std::pair<Index, Index>>{{3, 5}}));
}

TEST(CheckSymmetry, FreeGroupActionGraph) {
  auto o = build_action_graph(ActionGraphSpec::tight(2));
  EXPECT_TRUE(check_symmetry(o, 50).empty());
  EXPECT_TRUE(check_degrees(o, 50).empty());
}

TEST(ExtractBall, SingleEdge) {
  auto o = as_oracle(load_finite_graph_string("A 0: 0\n"));
  auto ball = extract_ball(o, {}, {}, {Side::kLeft, 0}, 3);
  EXPECT_EQ(ball.graph.left_ids(), (IndexList{0}));
  EXPECT_EQ(ball.graph.right_ids(), (IndexList{0}));
  EXPECT_TRUE(ball.shell_right.empty());
  EXPECT_EQ(ball.interior_right, (IndexList{0}));
}

TEST(ExtractBall, Parity) {
  auto o = as_oracle(load_finite_graph_string("A 0: 0\n"));
  EXPECT_THROW(extract_ball(o, {}, {}, {Side::kLeft, 0}, 2), ParityError);
  EXPECT_THROW(extract_ball(o, {}, {}, {Side::kRight, 0}, 3), ParityError);
  EXPECT_THROW(extract_ball(o, {}, {}, {Side::kRight, 0}, 0), ParityError);
  EXPECT_THROW(extract_ball(o, {0}, {}, {Side::kLeft, 0}, 1), std::invalid_argument);
}

TEST(ExtractBall, DetectsAsymmetry) {
  EXPECT_THROW(extract_ball(planted_asymmetry(), {}, {}, {Side::kLeft, 0}, 3), OracleError);
}

TEST(ExtractBall, Budget) {
  auto o = build_action_graph(ActionGraphSpec::tight(2));
  EXPECT_THROW(extract_ball(o, {}, {}, {Side::kLeft, 0}, 5, 10), BallBudgetExceeded);
  EXPECT_NO_THROW(extract_ball(o, {}, {}, {Side::kLeft, 0}, 5, 1000));
}

// Free-group ball: the neighbors of the identity are the indices of
// e, a, A, b, B. Ground truth comes from the word enumeration order.
TEST(ExtractBall, FreeGroupRadiusOne) {
  auto o = build_action_graph(ActionGraphSpec::tight(2));
  auto ball = extract_ball(o, {}, {}, {Side::kLeft, 0}, 1);
  EXPECT_EQ(ball.graph.left_ids(), (IndexList{0}));
  EXPECT_EQ(ball.graph.right_ids(), (IndexList{0, 1, 2, 3, 4}));
  EXPECT_EQ(ball.shell_right, (IndexList{0, 1, 2, 3, 4}));
  EXPECT_TRUE(ball.interior_right.empty());

  auto masked = extract_ball(o, {}, {0}, {Side::kLeft, 0}, 1);
  EXPECT_EQ(masked.graph.right_ids(), (IndexList{1, 2, 3, 4}));
}

// Every ball agrees with a plain edge-list BFS: vertex sets, induced edges
// and the shell.
TEST(ExtractBall, MatchesReferenceBfs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t nl = 2 + t % 7, nr = 2 + (t * 5) % 9;
    auto g = random_graph(rng, nl, nr, 0.3);
    auto edges = edge_set(g);
    std::set<Index> rl, rr;
    IndexSet rl_set, rr_set;
    for (Index i = 0; i < nl; ++i) {
      if (rng() % 5 == 0) rl.insert(i), rl_set.insert(i);
    }
    for (Index i = 0; i < nr; ++i) {
      if (rng() % 5 == 0) rr.insert(i), rr_set.insert(i);
    }
    Side side = t % 2 ? Side::kRight : Side::kLeft;
    const auto& pool = side == Side::kLeft ? rl : rr;
    Index pivot = rng() % (side == Side::kLeft ? nl : nr);
    if (pool.count(pivot)) continue;
    Index radius = (side == Side::kLeft ? 1 : 2) + 2 * (rng() % 3);

    auto ball = extract_ball(as_oracle(g), rl_set, rr_set, {side, pivot}, radius);
    auto dist = reference_distances(edges, rl, rr, {side == Side::kLeft ? 0 : 1, pivot}, radius);

    IndexList want_left, want_right, want_shell;
    for (auto [v, d] : dist) {
      (v.first == 0 ? want_left : want_right).push_back(v.second);
      if (v.first == 1 && d == radius) want_shell.push_back(v.second);
    }
    ASSERT_EQ(ball.graph.left_ids(), want_left);
    ASSERT_EQ(ball.graph.right_ids(), want_right);
    ASSERT_EQ(ball.shell_right, want_shell);
    std::set<std::pair<Index, Index>> want_edges;
    for (auto [l, r] : edges) {
      if (dist.count({0, l}) && dist.count({1, r})) want_edges.emplace(l, r);
    }
    ASSERT_EQ(edge_set(ball.graph), want_edges);

    // Radius r + 2 contains radius r as an induced subgraph.
    auto bigger = extract_ball(as_oracle(g), rl_set, rr_set, {side, pivot}, radius + 2);
    for (Index l : ball.graph.left_ids()) {
      ASSERT_EQ(bigger.graph.neighbors_of_left(l), ball.graph.neighbors_of_left(l));
    }
    for (Index r : ball.graph.right_ids()) ASSERT_TRUE(bigger.graph.has_right(r));
  }
}

TEST(ExtractBall, Deterministic) {
  auto o = build_action_graph(ActionGraphSpec::tight(2));
  auto a = extract_ball(o, {5, 6}, {1}, {Side::kRight, 2}, 4);
  auto b = extract_ball(o, {5, 6}, {1}, {Side::kRight, 2}, 4);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.shell_right, b.shell_right);
}

}  // namespace
}  // namespace harem
