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

#ifndef HAREM_PSEUDOGROUP_HPP_
#define HAREM_PSEUDOGROUP_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "harem/action.hpp"
#include "harem/core_graph.hpp"
#include "harem/free_group.hpp"

namespace harem {

// A bijection between two decidable subsets of the naturals. `map` is only
// meaningful on the domain and `inverse_map` on the range.
//
// displacement_bound is declared, not computed: a bound on d(p(x), x) over
// the whole domain cannot be verified by a finite computation, so callers
// state it and check_displacement() spot-checks it.
struct PartialBijection {
  std::function<bool(Index)> domain;
  std::function<Index(Index)> map;
  std::function<Index(Index)> inverse_map;
  std::function<bool(Index)> range;
  std::optional<Index> displacement_bound;
};

PartialBijection identity_pb();
// x -> w x on all of the naturals, displacement |w|.
PartialBijection translation_pb(const Word& w);

// `second` after `first`, defined where first(x) lies in second's domain.
PartialBijection compose_pb(PartialBijection first, PartialBijection second);
PartialBijection invert_pb(PartialBijection p);
PartialBijection restrict_pb(PartialBijection p, std::function<bool(Index)> subset);
// Glues parts with pairwise disjoint domains and ranges. Disjointness is
// checked lazily: evaluating at a point claimed by two parts throws
// DisjointnessViolation.
PartialBijection piecewise_pb(std::vector<PartialBijection> parts);

// Points x < window where the bijection invariants fail: x in the domain
// but map(x) outside the range, or inverse_map(map(x)) != x.
IndexList check_pb_window(const PartialBijection& p, Index window);

// Points x < window in the domain with d_R(x, p(x)) above the declared bound.
IndexList check_displacement(const PartialBijection& p, const GeneratorSet& R,
                             Index window);

}  // namespace harem

#endif  // HAREM_PSEUDOGROUP_HPP_
