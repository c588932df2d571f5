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

#ifndef HAREM_FLOW_MATCHING_HPP_
#define HAREM_FLOW_MATCHING_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harem/core_graph.hpp"

namespace harem {

// A finite (1,k)-matching problem. Required left vertices take exactly k
// partners, other left vertices at most k. Required right vertices take
// exactly one partner, optional ones at most one, and right vertices in
// neither list none at all.
struct MatchingRequest {
  FiniteBipartiteGraph graph;
  unsigned k = 1;
  IndexList required_left;
  IndexList required_right;
  IndexList optional_right;

  // Every vertex of `graph` required.
  static MatchingRequest all_required(FiniteBipartiteGraph graph, unsigned k);

  // Throws std::invalid_argument if the index lists are unsorted, not
  // subsets of the graph, or overlapping.
  void validate() const;
};

// Stars of a (1,k)-matching, keyed by left index. Only non-empty stars are
// stored; each star is ascending.
struct HaremMatching {
  std::map<Index, IndexList> stars;

  // Right index -> owning left index. If a right index appears in several
  // stars the smallest owner wins (verify_matching reports the conflict).
  std::map<Index, Index> inverse() const;
  std::size_t edge_count() const;

  friend bool operator==(const HaremMatching&, const HaremMatching&) = default;
};

// Lexicographic order on star maps: left indices ascending, a missing star
// reads as empty, stars compare as sequences (a proper prefix is smaller).
bool star_map_less(const HaremMatching& a, const HaremMatching& b);

// Canonical solution: the lexicographically least feasible star map, or
// nullopt if the request is infeasible.
std::optional<HaremMatching> solve_harem(const MatchingRequest& req);

// Same as solve_harem, but only the stars of left vertices <= `through` are
// canonical; later stars are some feasible completion. The canonical part
// agrees with solve_harem.
std::optional<HaremMatching> solve_harem_prefix(const MatchingRequest& req,
                                                Index through);

inline constexpr std::size_t kBruteForceMaxLeft = 6;
inline constexpr std::size_t kBruteForceMaxRight = 12;

// Every feasible matching, ascending under star_map_less. Exhaustive; throws
// SizeGuardError above 6 left or 12 right vertices.
std::vector<HaremMatching> brute_force_harem(const MatchingRequest& req);

inline constexpr std::size_t kHallMaxSide = 24;

// Hall's harem inequalities over all non-empty subsets of either side:
// |N(X)| >= k|X| and k|N(Y)| >= |Y|. Throws SizeGuardError above 24
// vertices on a side.
bool check_hall_harem(const FiniteBipartiteGraph& graph, unsigned k);

// Expanding harem condition with margin function h, for n = 0..n_max:
// h(n) <= |X| implies n <= |N(X)| - k|X|, and h(n) <= |Y| implies
// n <= |N(Y)| - |Y|/k. Throws WitnessError if h(0) != 0.
bool check_cehhc_witness(const FiniteBipartiteGraph& graph, unsigned k,
                         const std::function<std::uint64_t(std::uint64_t)>& h,
                         std::uint64_t n_max);

struct MatchingViolation {
  enum class Kind {
    kNonEdge,          // (left, right) is not an edge
    kStarSize,         // left has `count` partners, expected k (or <= k)
    kRightUncovered,   // required right vertex has no partner
    kRightOvercovered  // right vertex appears in `count` stars
  };
  Kind kind;
  Index left = 0;
  Index right = 0;
  std::size_t count = 0;

  std::string describe() const;
  friend bool operator==(const MatchingViolation&,
                         const MatchingViolation&) = default;
};

struct MatchingReport {
  std::vector<MatchingViolation> violations;
  bool ok() const { return violations.empty(); }
};

MatchingReport verify_matching(const MatchingRequest& req,
                               const HaremMatching& m);

}  // namespace harem

#endif  // HAREM_FLOW_MATCHING_HPP_
