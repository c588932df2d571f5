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

#include "harem/free_group.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "harem/errors.hpp"

namespace harem {

namespace {

Letter letter_from_rank(unsigned r) {
  Letter g = static_cast<Letter>(r / 2 + 1);
  return (r % 2 == 1) ? -g : g;
}

void check_rank(const Word& x, const Word& y) {
  if (x.rank() != y.rank()) {
    throw RankMismatch("words of rank " + std::to_string(x.rank()) + " and " +
                       std::to_string(y.rank()));
  }
}

}  // namespace

std::vector<Letter> reduce(std::vector<Letter> letters) {
  std::size_t top = 0;
  for (Letter x : letters) {
    if (top > 0 && letters[top - 1] == -x) {
      --top;
    } else {
      letters[top++] = x;
    }
  }
  letters.resize(top);
  return letters;
}

Word::Word(unsigned rank, std::vector<Letter> letters) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  for (Letter x : letters) {
    if (x == 0 || static_cast<unsigned>(x < 0 ? -x : x) > rank) {
      throw std::invalid_argument("letter " + std::to_string(x) +
                                  " outside rank " + std::to_string(rank));
    }
  }
  letters_ = reduce(std::move(letters));
}

Word Word::generator(unsigned rank, unsigned g, bool inverse) {
  Letter x = static_cast<Letter>(g);
  return Word(rank, {inverse ? -x : x});
}

Word mul(const Word& x, const Word& y) {
  check_rank(x, y);
  std::vector<Letter> letters = x.letters();
  letters.insert(letters.end(), y.letters().begin(), y.letters().end());
  return Word(x.rank(), std::move(letters));
}

Word inv(const Word& x) {
  std::vector<Letter> letters(x.letters().rbegin(), x.letters().rend());
  for (Letter& l : letters) l = -l;
  return Word(x.rank(), std::move(letters));
}

Word parse_word(unsigned rank, std::string_view text) {
  if (text == "1" || (rank < 5 && text == "e")) return Word::identity(rank);
  if (text.empty()) throw std::invalid_argument("empty word");
  std::vector<Letter> letters;
  for (char c : text) {
    Letter x;
    if (c >= 'a' && c <= 'z') {
      x = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      x = -(c - 'A' + 1);
    } else {
      throw std::invalid_argument(std::string("bad letter '") + c + "'");
    }
    if (static_cast<unsigned>(x < 0 ? -x : x) > rank) {
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' exceeds rank " + std::to_string(rank));
    }
    letters.push_back(x);
  }
  return Word(rank, std::move(letters));
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return w.rank() < 5 ? "e" : "1";
  std::string s;
  for (Letter x : w.letters()) {
    s += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
  }
  return s;
}

std::vector<Word> parse_word_list(unsigned rank, std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - start);
    // Tolerate surrounding blanks.
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.push_back(parse_word(rank, tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_word_list(const std::vector<Word>& ws, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += sep;
    s += format_word(ws[i]);
  }
  return s;
}

Enumeration::Enumeration(unsigned rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  unsigned __int128 total = 0;
  unsigned __int128 c = 1;  // words of the current length
  for (std::size_t len = 0;; ++len) {
    offsets_.push_back(static_cast<Index>(total));
    if (len == 1) c = 2 * rank_;
    if (len > 1) c *= (2 * rank_ - 1);
    total += c;
    if (total > std::numeric_limits<Index>::max()) break;
    if (rank_ == 1 && len > 4096) break;
  }
}

Index Enumeration::count_of_length(std::size_t len) const {
  if (len + 1 < offsets_.size()) return offsets_[len + 1] - offsets_[len];
  return std::numeric_limits<Index>::max();
}

Word Enumeration::index_to_word(Index n) const {
  std::size_t len = 0;
  while (len + 1 < offsets_.size() && offsets_[len + 1] <= n) ++len;
  if (len + 1 == offsets_.size()) {
    // n lies beyond the last full length we tabulated.
    throw std::overflow_error("index " + std::to_string(n) + " out of range");
  }
  Index pos = n - offsets_[len];
  const Index base = 2 * rank_ - 1;
  std::vector<Index> digits(len);
  for (std::size_t i = len; i-- > 1;) {
    digits[i] = pos % base;
    pos /= base;
  }
  std::vector<Letter> letters;
  letters.reserve(len);
  if (len > 0) {
    digits[0] = pos;
    letters.push_back(letter_from_rank(static_cast<unsigned>(digits[0])));
    for (std::size_t i = 1; i < len; ++i) {
      unsigned forbidden = letter_rank(-letters.back());
      unsigned r = static_cast<unsigned>(digits[i]);
      if (r >= forbidden) ++r;
      letters.push_back(letter_from_rank(r));
    }
  }
  return Word(rank_, std::move(letters));
}

Index Enumeration::word_to_index(const Word& w) const {
  if (w.rank() != rank_) {
    throw RankMismatch("word of rank " + std::to_string(w.rank()) +
                       " in enumeration of rank " + std::to_string(rank_));
  }
  const std::size_t len = w.length();
  if (len + 1 >= offsets_.size()) {
    throw std::overflow_error("word too long for 64-bit index");
  }
  const unsigned __int128 base = 2 * rank_ - 1;
  unsigned __int128 pos = 0;
  for (std::size_t i = 0; i < len; ++i) {
    unsigned r = letter_rank(w.letters()[i]);
    if (i > 0 && letter_rank(-w.letters()[i - 1]) < r) --r;
    pos = pos * (i == 0 ? 1 : base) + r;
  }
  unsigned __int128 idx = pos + offsets_[len];
  if (idx > std::numeric_limits<Index>::max()) {
    throw std::overflow_error("word too long for 64-bit index");
  }
  return static_cast<Index>(idx);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    unsigned ra = letter_rank(a.letters()[i]), rb = letter_rank(b.letters()[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

Index act(const Enumeration& e, const Word& w, Index n) {
  if (w.rank() != e.rank()) {
    throw RankMismatch("word of rank " + std::to_string(w.rank()) +
                       " acting in rank " + std::to_string(e.rank()));
  }
  return e.word_to_index(mul(w, e.index_to_word(n)));
}

}  // namespace harem
