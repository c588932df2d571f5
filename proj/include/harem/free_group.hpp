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

#ifndef HAREM_FREE_GROUP_HPP_
#define HAREM_FREE_GROUP_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "harem/core_graph.hpp"

namespace harem {

// Signed generator symbol: +g is generator g (1-based), -g its inverse.
using Letter = std::int32_t;

// A reduced word in the free group of the given rank.
class Word {
 public:
  Word() = default;
  // Freely reduces `letters`. Throws std::invalid_argument for a letter
  // outside +-1..+-rank.
  Word(unsigned rank, std::vector<Letter> letters);
  static Word identity(unsigned rank) { return Word(rank, {}); }
  static Word generator(unsigned rank, unsigned g, bool inverse = false);

  unsigned rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  unsigned rank_ = 1;
  std::vector<Letter> letters_;
};

// Free reduction (no rank check on the result).
std::vector<Letter> reduce(std::vector<Letter> letters);

Word mul(const Word& x, const Word& y);
Word inv(const Word& x);

// Word syntax: a..z are generators 1..26, A..Z their inverses. The identity
// is written "e" when rank < 5 (so 'e' is never a generator there) and "1"
// in any rank. Throws std::invalid_argument on bad input.
Word parse_word(unsigned rank, std::string_view text);
std::string format_word(const Word& w);
// Comma-separated words, e.g. "a,b,A,B,e".
std::vector<Word> parse_word_list(unsigned rank, std::string_view text);
std::string format_word_list(const std::vector<Word>& ws,
                             std::string_view sep = ",");

// Shortlex order on reduced words with letter order a < A < b < B < ...
// Bijection with the naturals; index 0 is the identity.
class Enumeration {
 public:
  explicit Enumeration(unsigned rank);

  unsigned rank() const { return rank_; }
  Word index_to_word(Index n) const;
  // Throws std::overflow_error if the index does not fit in 64 bits.
  Index word_to_index(const Word& w) const;
  // Number of reduced words of length exactly len (saturating).
  Index count_of_length(std::size_t len) const;

 private:
  unsigned rank_;
  // offsets_[len] = number of reduced words shorter than len; filled while it
  // fits in 64 bits.
  std::vector<Index> offsets_;
};

// Position of a letter in the order a < A < b < B < ...
inline unsigned letter_rank(Letter x) {
  return 2 * (static_cast<unsigned>(x < 0 ? -x : x) - 1) + (x < 0 ? 1 : 0);
}

// Canonical shortlex comparison (equal to comparing indices).
bool shortlex_less(const Word& a, const Word& b);

// Left multiplication: index of w * word(n). Throws RankMismatch if the
// enumeration's rank differs from w's.
Index act(const Enumeration& e, const Word& w, Index n);

}  // namespace harem

#endif  // HAREM_FREE_GROUP_HPP_
