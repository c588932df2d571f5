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

#include <algorithm>
#include <stdexcept>

#include "harem/errors.hpp"

namespace harem {

HWitness HWitness::identity() {
  return {[](std::uint64_t n) { return n; }, "identity"};
}

HWitness HWitness::vacuous(std::uint64_t left_count) {
  return {[left_count](std::uint64_t n) -> std::uint64_t {
            return n == 0 ? 0 : left_count + 1;
          },
          "vacuous(" + std::to_string(left_count + 1) + ")"};
}

HWitness HWitness::constant_zero() {
  return {[](std::uint64_t) -> std::uint64_t { return 0; }, "zero"};
}

HaremEngine::HaremEngine(BipartiteOracle oracle, unsigned k, HWitness h,
                         EngineOptions options)
    : oracle_(std::move(oracle)), k_(k), h_(std::move(h)), options_(options) {
  if (k_ < 1) throw std::invalid_argument("k must be at least 1");
  if (h_.eval(0) != 0) throw WitnessError("witness must satisfy h(0) = 0");
}

std::function<std::uint64_t(std::uint64_t)> HaremEngine::shifted_h() const {
  auto h = h_.eval;
  std::uint64_t shift = step_ * k_;
  return [h, shift](std::uint64_t n) -> std::uint64_t {
    return n == 0 ? 0 : h(n + shift);
  };
}

Index HaremEngine::step_radius(Side pivot_side) const {
  std::uint64_t hk = shifted_h()(k_);
  return pivot_side == Side::kLeft ? std::max<Index>(2 * hk + 1, 3)
                                   : std::max<Index>(2 * hk + 2, 4);
}

std::optional<Index> HaremEngine::least_remaining(Side side) const {
  const IndexSet& removed = side == Side::kLeft ? removed_left_ : removed_right_;
  std::optional<Index> bound = oracle_.index_bound(side);
  for (Index i = side == Side::kLeft ? next_left_ : next_right_;; ++i) {
    if (bound && i >= *bound) return std::nullopt;
    if (!removed.count(i) && oracle_.has_vertex(Vertex{side, i})) return i;
  }
}

std::optional<Vertex> HaremEngine::next_pivot() {
  Side preferred = step_ % 2 == 0 ? Side::kLeft : Side::kRight;
  // A finite oracle may run out on one side first; then the other side
  // supplies the pivot (its local problem is infeasible unless the graph is
  // already unbalanced, which the solver reports).
  for (Side side : {preferred, opposite(preferred)}) {
    if (auto i = least_remaining(side)) {
      (side == Side::kLeft ? next_left_ : next_right_) = *i + 1;
      return Vertex{side, *i};
    }
  }
  return std::nullopt;
}

std::optional<CommittedStar> HaremEngine::run_step() {
  std::optional<Vertex> pivot = next_pivot();
  if (!pivot) return std::nullopt;
  const Index radius = step_radius(pivot->side);
  BallSubgraph ball = extract_ball(oracle_, removed_left_, removed_right_,
                                   *pivot, radius, options_.max_ball_size);

  MatchingRequest req;
  req.k = k_;
  req.required_left = ball.graph.left_ids();
  req.required_right = ball.interior_right;
  req.optional_right = ball.shell_right;
  req.graph = std::move(ball.graph);

  // Only the stars up to the one we commit need to be canonical.
  Index through = pivot->index;
  if (pivot->side == Side::kRight) {
    through = 0;
    for (Index l : oracle_.neighbors(*pivot)) {
      if (!removed_left_.count(l)) through = std::max(through, l);
    }
  }
  std::optional<HaremMatching> local = solve_harem_prefix(req, through);
  if (!local) {
    throw CEHHCViolation("local matching around " + to_string(*pivot) +
                         " (radius " + std::to_string(radius) +
                         ") is infeasible; witness " + h_.description +
                         " is not valid for " + oracle_.name);
  }

  Index owner = pivot->index;
  if (pivot->side == Side::kRight) {
    auto inv = local->inverse();
    auto it = inv.find(pivot->index);
    if (it == inv.end()) throw InternalError("pivot left unmatched by local solution");
    owner = it->second;
  }
  const IndexList& star = local->stars.at(owner);
  if (star.size() != k_) throw InternalError("committed star has the wrong size");

  removed_left_.insert(owner);
  for (Index r : star) {
    removed_right_.insert(r);
    owner_.emplace(r, owner);
  }
  stars_.stars.emplace(owner, star);
  CommittedStar committed{owner, star, *pivot, radius};
  history_.push_back(committed);
  ++step_;
  return committed;
}

IndexList HaremEngine::match_left(Index i) {
  if (!oracle_.has_vertex(Vertex{Side::kLeft, i})) {
    throw std::out_of_range("no left vertex " + std::to_string(i));
  }
  while (!left_committed(i)) {
    if (!run_step()) throw InternalError("graph exhausted before covering left vertex");
  }
  return stars_.stars.at(i);
}

Index HaremEngine::match_right(Index j) {
  if (!oracle_.has_vertex(Vertex{Side::kRight, j})) {
    throw std::out_of_range("no right vertex " + std::to_string(j));
  }
  while (!right_committed(j)) {
    if (!run_step()) throw InternalError("graph exhausted before covering right vertex");
  }
  return owner_.at(j);
}

EngineSnapshot HaremEngine::committed_prefix() const {
  EngineSnapshot s;
  s.step = step_;
  s.committed = stars_;
  s.removed_left.assign(removed_left_.begin(), removed_left_.end());
  s.removed_right.assign(removed_right_.begin(), removed_right_.end());
  std::sort(s.removed_left.begin(), s.removed_left.end());
  std::sort(s.removed_right.begin(), s.removed_right.end());
  s.history = history_;
  return s;
}

}  // namespace harem
