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

#include "harem/amenability.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "harem/action.hpp"
#include "harem/errors.hpp"

namespace harem {

namespace {

void check_uniform_rank(const std::vector<Word>& K) {
  for (const Word& w : K) {
    if (w.rank() != K.front().rank()) throw RankMismatch("mixed ranks in K");
  }
}

}  // namespace

bool is_folner(const std::vector<Word>& K, std::uint64_t n, const IndexList& F) {
  if (F.empty()) throw EmptySetError("Folner test on an empty set");
  if (K.empty()) return true;
  check_uniform_rank(K);
  Enumeration e(K.front().rank());
  std::unordered_set<Index> members(F.begin(), F.end());
  for (const Word& k : K) {
    // |F \ kF| = |F| - |F cap kF|
    std::uint64_t inside = 0;
    for (Index x : members) inside += members.count(act(e, k, x));
    std::uint64_t outside = members.size() - inside;
    if (n * outside >= members.size()) return false;
  }
  return true;
}

std::optional<IndexList> folner_search(const std::vector<Word>& K, std::uint64_t n,
                                       IndexList ground, std::size_t max_size) {
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  if (ground.size() > kFolnerMaxGround || max_size > kFolnerMaxSize) {
    throw SizeGuardError("folner_search is limited to a ground set of 24 and sets of 8");
  }
  const std::size_t g = ground.size();
  for (std::size_t size = 1; size <= std::min(max_size, g); ++size) {
    // Lexicographic combinations of positions.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      IndexList F;
      for (std::size_t p : pick) F.push_back(ground[p]);
      if (is_folner(K, n, F)) return F;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == g - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Word, Word>> wbt_free(const std::vector<Word>& K) {
  if (K.empty()) return std::nullopt;
  check_uniform_rank(K);
  std::vector<Word> sorted = shortlex_sorted(K);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (mul(sorted[i], sorted[j]) != mul(sorted[j], sorted[i])) {
        return std::make_pair(sorted[i], sorted[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace harem
