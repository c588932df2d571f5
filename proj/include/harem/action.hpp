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

#ifndef HAREM_ACTION_HPP_
#define HAREM_ACTION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "harem/core_graph.hpp"
#include "harem/free_group.hpp"

namespace harem {

// Finite symmetric set of group elements containing the identity, sorted in
// shortlex order.
class GeneratorSet {
 public:
  // Throws std::invalid_argument unless `elements` is non-empty, of uniform
  // rank, closed under inverses and contains the identity.
  GeneratorSet(unsigned rank, std::vector<Word> elements);

  // Adds the identity and all inverses.
  static GeneratorSet symmetric_closure(unsigned rank, std::vector<Word> words);
  // {1, a, A, b, B, ...}
  static GeneratorSet standard(unsigned rank);
  // All reduced products of `power` elements of `base`.
  static GeneratorSet power(const GeneratorSet& base, unsigned power);

  unsigned rank() const { return rank_; }
  const std::vector<Word>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t max_length() const;
  bool contains(const Word& w) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  unsigned rank_;
  std::vector<Word> elements_;
};

// Sorted, duplicate-free word list.
std::vector<Word> shortlex_sorted(std::vector<Word> words);

// Least number of applications of elements of R carrying x to y in the
// left action on the shortlex-enumerated free group; nullopt when that
// exceeds `cap`.
std::optional<Index> d_R(const GeneratorSet& R, Index x, Index y, Index cap);

// {y : d_R(center, y) <= radius}, ascending.
IndexList ball(const GeneratorSet& R, Index center, Index radius);

// Union of the balls around each point of `points`.
IndexList ball_of_set(const GeneratorSet& R, const IndexList& points,
                      Index radius);

}  // namespace harem

#endif  // HAREM_ACTION_HPP_
