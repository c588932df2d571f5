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

#ifndef HAREM_AMENABILITY_HPP_
#define HAREM_AMENABILITY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "harem/core_graph.hpp"
#include "harem/free_group.hpp"

namespace harem {

// n * |F \ kF| < |F| for every k in K, in exact integer arithmetic.
// Throws EmptySetError for empty F and RankMismatch for mixed ranks.
bool is_folner(const std::vector<Word>& K, std::uint64_t n, const IndexList& F);

inline constexpr std::size_t kFolnerMaxGround = 24;
inline constexpr std::size_t kFolnerMaxSize = 8;

// First F in size-then-lexicographic order (over the ascending ground set)
// with 1 <= |F| <= max_size and is_folner(K, n, F). Throws SizeGuardError
// when |ground| > 24 or max_size > 8.
std::optional<IndexList> folner_search(const std::vector<Word>& K, std::uint64_t n,
                                       IndexList ground, std::size_t max_size);

// Membership test for the Banach-Tarski witness family in a free group:
// the first non-commuting pair (x, y), x < y in shortlex order, or nullopt
// when all elements of K commute.
std::optional<std::pair<Word, Word>> wbt_free(const std::vector<Word>& K);

}  // namespace harem

#endif  // HAREM_AMENABILITY_HPP_
