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

#include "harem/harem_engine.hpp"

#include <gtest/gtest.h>

#include <random>

#include "harem/action.hpp"
#include "harem/decomposition.hpp"
#include "harem/errors.hpp"
#include "test_util.hpp"

namespace harem {
namespace {

BipartiteOracle f2() { return build_action_graph(ActionGraphSpec::tight(2)); }

// A graph with a planted perfect (1,2)-matching (left l owns rights 2l and
// 2l+1 after a shuffle) plus random extra edges.
FiniteBipartiteGraph planted_graph(std::mt19937_64& rng, std::size_t nl, double noise) {
  std::vector<Index> perm(2 * nl);
  for (Index i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(noise);
  std::vector<std::pair<Index, IndexList>> rows;
  for (Index l = 0; l < nl; ++l) {
    IndexList nbrs{perm[2 * l], perm[2 * l + 1]};
    for (Index r = 0; r < 2 * nl; ++r) {
      if (coin(rng)) nbrs.push_back(r);
    }
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    rows.emplace_back(l, std::move(nbrs));
  }
  return FiniteBipartiteGraph::from_rows(std::move(rows));
}

// Runs the engine until the finite oracle is exhausted.
HaremMatching exhaust(HaremEngine& engine) {
  while (engine.run_step()) {
  }
  return engine.committed_prefix().committed;
}

TEST(HWitness, Values) {
  EXPECT_EQ(HWitness::identity().eval(7), 7u);
  EXPECT_EQ(HWitness::vacuous(4).eval(0), 0u);
  EXPECT_EQ(HWitness::vacuous(4).eval(3), 5u);
  EXPECT_EQ(HWitness::constant_zero().eval(9), 0u);
}

TEST(HaremEngine, RejectsBadArguments) {
  HWitness bad{[](std::uint64_t n) { return n + 1; }, "shifted"};
  EXPECT_THROW(HaremEngine(f2(), 2, bad), WitnessError);
  EXPECT_THROW(HaremEngine(f2(), 0, HWitness::identity()), std::invalid_argument);
}

TEST(HaremEngine, RadiusSchedule) {
  HaremEngine engine(f2(), 2, HWitness::identity());
  EXPECT_EQ(engine.step_radius(Side::kLeft), 5u);
  ASSERT_TRUE(engine.run_step());
  // One shift: h'(2) = h(4) = 4.
  EXPECT_EQ(engine.shifted_h()(2), 4u);
  EXPECT_EQ(engine.shifted_h()(0), 0u);
  EXPECT_EQ(engine.step_radius(Side::kRight), 10u);
  HaremEngine zero(f2(), 2, HWitness::constant_zero());
  EXPECT_EQ(zero.step_radius(Side::kLeft), 3u);
  EXPECT_EQ(zero.step_radius(Side::kRight), 4u);
}

// Regression values from the canonical run on the F2 action graph.
TEST(HaremEngine, FreeGroupFirstSteps) {
  HaremEngine engine(f2(), 2, HWitness::identity());
  auto s0 = engine.run_step();
  ASSERT_TRUE(s0);
  EXPECT_EQ(s0->pivot, (Vertex{Side::kLeft, 0}));
  EXPECT_EQ(s0->radius, 5u);
  EXPECT_EQ(s0->left, 0u);
  EXPECT_EQ(s0->rights, (IndexList{0, 1}));

  auto s1 = engine.run_step();
  ASSERT_TRUE(s1);
  EXPECT_EQ(s1->pivot, (Vertex{Side::kRight, 2}));
  EXPECT_EQ(s1->radius, 10u);
  EXPECT_EQ(s1->left, 2u);
  EXPECT_EQ(s1->rights, (IndexList{2, 8}));

  auto snap = engine.committed_prefix();
  EXPECT_EQ(snap.step, 2u);
  EXPECT_EQ(snap.removed_left, (IndexList{0, 2}));
  EXPECT_EQ(snap.removed_right, (IndexList{0, 1, 2, 8}));
  EXPECT_EQ(engine.match_right(8), 2u);
  EXPECT_EQ(engine.match_left(0), (IndexList{0, 1}));
  // Partners are neighbors: d_R(m, psi) <= 1.
  auto R = GeneratorSet::standard(2);
  for (const auto& [l, star] : snap.committed.stars) {
    for (Index r : star) EXPECT_TRUE(d_R(R, l, r, 1)) << l << " " << r;
  }
}

TEST(HaremEngine, ReplayIsIdentical) {
  HaremEngine a(f2(), 2, HWitness::identity());
  HaremEngine b(f2(), 2, HWitness::identity());
  for (int s = 0; s < 2; ++s) {
    ASSERT_EQ(a.run_step(), b.run_step());
    ASSERT_EQ(a.committed_prefix(), b.committed_prefix());
  }
}

TEST(HaremEngine, BallBudget) {
  HaremEngine engine(f2(), 2, HWitness::identity(), EngineOptions{10});
  EXPECT_THROW(engine.match_left(0), BallBudgetExceeded);
}

TEST(HaremEngine, FiniteExhaustion) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t nl = 1 + rng() % 8;
    auto g = planted_graph(rng, nl, 0.15);
    ASSERT_TRUE(check_hall_harem(g, 2));
    HaremEngine engine(as_oracle(g), 2, HWitness::vacuous(nl));
    HaremMatching m = exhaust(engine);
    auto req = MatchingRequest::all_required(g, 2);
    auto rep = verify_matching(req, m);
    ASSERT_TRUE(rep.ok()) << dump_finite_graph(g);
    ASSERT_TRUE(solve_harem(req).has_value());
    for (Index l : g.left_ids()) ASSERT_EQ(engine.match_left(l), m.stars.at(l));
    EXPECT_FALSE(engine.run_step());
  }
}

// On finite graphs the vacuous witness makes every ball the whole
// component, so the engine fails exactly when no perfect matching exists.
TEST(HaremEngine, FiniteFailureIsCehhcViolation) {
  std::mt19937_64 rng(32);
  int failures = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t nl = 1 + rng() % 4;
    auto g = testing::random_graph(rng, nl, 2 * nl, 0.45);
    bool hall = check_hall_harem(g, 2);
    HaremEngine engine(as_oracle(g), 2, HWitness::vacuous(nl));
    if (hall) {
      HaremMatching m = exhaust(engine);
      ASSERT_TRUE(verify_matching(MatchingRequest::all_required(g, 2), m).ok());
    } else {
      ASSERT_THROW(exhaust(engine), CEHHCViolation) << dump_finite_graph(g);
      ++failures;
    }
  }
  EXPECT_GT(failures, 20);
}

TEST(HaremEngine, MissingVertices) {
  auto g = load_finite_graph_string("A 0: 0 1\nA 2: 2 3\n");
  HaremEngine engine(as_oracle(g), 2, HWitness::vacuous(2));
  EXPECT_THROW(engine.match_left(1), std::out_of_range);
  EXPECT_THROW(engine.match_right(9), std::out_of_range);
  EXPECT_EQ(engine.match_right(3), 2u);
}

TEST(HaremEngine, Pigeonhole) {
  auto g = load_finite_graph_string("A 0: 0\nA 1: 0\n");
  HaremEngine engine(as_oracle(g), 1, HWitness::vacuous(2));
  EXPECT_THROW(engine.run_step(), CEHHCViolation);
}

}  // namespace
}  // namespace harem
