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

#ifndef HAREM_HAREM_ENGINE_HPP_
#define HAREM_HAREM_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harem/core_graph.hpp"
#include "harem/flow_matching.hpp"

namespace harem {

// Margin function of the expanding harem condition. eval(0) must be 0.
struct HWitness {
  std::function<std::uint64_t(std::uint64_t)> eval;
  std::string description;

  static HWitness identity();
  // 0 at 0 and left_count + 1 elsewhere: on a finite graph with left_count
  // left vertices every condition with n >= 1 is vacuous.
  static HWitness vacuous(std::uint64_t left_count);
  static HWitness constant_zero();
};

struct CommittedStar {
  Index left = 0;
  IndexList rights;
  Vertex pivot;
  Index radius = 0;

  friend bool operator==(const CommittedStar&, const CommittedStar&) = default;
};

struct EngineSnapshot {
  std::uint64_t step = 0;
  HaremMatching committed;
  IndexList removed_left;
  IndexList removed_right;
  std::vector<CommittedStar> history;

  friend bool operator==(const EngineSnapshot&, const EngineSnapshot&) = default;
};

struct EngineOptions {
  // Largest ball (in vertices) a single step may extract.
  std::size_t max_ball_size = 5'000'000;
};

// Lazy back-and-forth construction of a perfect (1,k)-matching on an
// oracle graph. Each step takes the least remaining left vertex (even
// steps) or right vertex (odd steps), solves the canonical local matching
// problem on a ball around it in the residual graph, and commits one star.
// Queries run steps on demand and memoize.
//
// Not thread-safe: a single engine must be used by one caller at a time.
class HaremEngine {
 public:
  // Throws WitnessError if h(0) != 0 and std::invalid_argument if k == 0.
  HaremEngine(BipartiteOracle oracle, unsigned k, HWitness h,
              EngineOptions options = {});

  unsigned k() const { return k_; }
  std::uint64_t step() const { return step_; }
  const BipartiteOracle& oracle() const { return oracle_; }

  // n -> 0 for n = 0, h(n + step * k) otherwise.
  std::function<std::uint64_t(std::uint64_t)> shifted_h() const;
  // max(2 h_s(k) + 1, 3) for a left pivot, max(2 h_s(k) + 2, 4) for a right one.
  Index step_radius(Side pivot_side) const;

  // Runs one construction step. Returns nullopt once a finite oracle has no
  // remaining vertices. Throws CEHHCViolation if the local problem is
  // infeasible and BallBudgetExceeded if the ball is too large.
  std::optional<CommittedStar> run_step();

  // Partners of left vertex i, running steps as needed.
  IndexList match_left(Index i);
  // Owner of right vertex j, running steps as needed.
  Index match_right(Index j);

  bool left_committed(Index i) const { return stars_.stars.count(i) > 0; }
  bool right_committed(Index j) const { return owner_.count(j) > 0; }

  EngineSnapshot committed_prefix() const;

 private:
  std::optional<Vertex> next_pivot();
  std::optional<Index> least_remaining(Side side) const;

  BipartiteOracle oracle_;
  unsigned k_;
  HWitness h_;
  EngineOptions options_;
  std::uint64_t step_ = 0;
  IndexSet removed_left_;
  IndexSet removed_right_;
  HaremMatching stars_;
  std::map<Index, Index> owner_;
  std::vector<CommittedStar> history_;
  Index next_left_ = 0;
  Index next_right_ = 0;
};

}  // namespace harem

#endif  // HAREM_HAREM_ENGINE_HPP_
