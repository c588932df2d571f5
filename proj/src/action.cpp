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

#include "harem/action.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace harem {

std::vector<Word> shortlex_sorted(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

GeneratorSet::GeneratorSet(unsigned rank, std::vector<Word> elements)
    : rank_(rank), elements_(shortlex_sorted(std::move(elements))) {
  if (elements_.empty()) throw std::invalid_argument("empty generator set");
  for (const Word& w : elements_) {
    if (w.rank() != rank_) throw std::invalid_argument("generator rank mismatch");
  }
  if (!elements_.front().is_identity()) {
    throw std::invalid_argument("generator set must contain the identity");
  }
  for (const Word& w : elements_) {
    if (!contains(inv(w))) {
      throw std::invalid_argument("generator set not closed under inverses: " +
                                  format_word(w));
    }
  }
}

GeneratorSet GeneratorSet::symmetric_closure(unsigned rank, std::vector<Word> words) {
  std::vector<Word> all{Word::identity(rank)};
  for (const Word& w : words) {
    all.push_back(w);
    all.push_back(inv(w));
  }
  return GeneratorSet(rank, std::move(all));
}

GeneratorSet GeneratorSet::standard(unsigned rank) {
  std::vector<Word> gens;
  for (unsigned g = 1; g <= rank; ++g) gens.push_back(Word::generator(rank, g));
  return symmetric_closure(rank, std::move(gens));
}

GeneratorSet GeneratorSet::power(const GeneratorSet& base, unsigned power) {
  std::vector<Word> current{Word::identity(base.rank())};
  for (unsigned i = 0; i < power; ++i) {
    std::vector<Word> next;
    for (const Word& x : current) {
      for (const Word& r : base.elements()) next.push_back(mul(x, r));
    }
    current = shortlex_sorted(std::move(next));
  }
  return GeneratorSet(base.rank(), std::move(current));
}

std::size_t GeneratorSet::max_length() const {
  std::size_t m = 0;
  for (const Word& w : elements_) m = std::max(m, w.length());
  return m;
}

bool GeneratorSet::contains(const Word& w) const {
  return std::binary_search(elements_.begin(), elements_.end(), w, shortlex_less);
}

namespace {

// Layered breadth-first search in word space. `visit(index, depth)` returns
// true to stop early.
template <typename Visit>
void bfs_layers(const GeneratorSet& R, Index start, Index max_depth, Visit&& visit) {
  Enumeration e(R.rank());
  std::unordered_map<Index, Index> depth{{start, 0}};
  std::vector<Word> frontier{e.index_to_word(start)};
  if (visit(start, 0)) return;
  for (Index d = 1; d <= max_depth && !frontier.empty(); ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& r : R.elements()) {
        Word u = mul(r, w);
        Index iu = e.word_to_index(u);
        if (depth.try_emplace(iu, d).second) {
          if (visit(iu, d)) return;
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

std::optional<Index> d_R(const GeneratorSet& R, Index x, Index y, Index cap) {
  if (x == y) return 0;
  // Bidirectional search; R is symmetric, so both sides use the same moves.
  Enumeration e(R.rank());
  struct Side {
    std::unordered_map<Index, Index> depth;
    std::vector<Word> frontier;
    Index reached = 0;
  };
  Side sx{{{x, 0}}, {e.index_to_word(x)}, 0};
  Side sy{{{y, 0}}, {e.index_to_word(y)}, 0};
  while (sx.reached + sy.reached < cap && !sx.frontier.empty() && !sy.frontier.empty()) {
    Side& grow = sx.frontier.size() <= sy.frontier.size() ? sx : sy;
    const Side& other = &grow == &sx ? sy : sx;
    const Index d = ++grow.reached;
    std::optional<Index> best;
    std::vector<Word> next;
    for (const Word& w : grow.frontier) {
      for (const Word& r : R.elements()) {
        Word u = mul(r, w);
        Index iu = e.word_to_index(u);
        if (!grow.depth.try_emplace(iu, d).second) continue;
        if (auto it = other.depth.find(iu); it != other.depth.end()) {
          best = std::min(best.value_or(it->second + d), it->second + d);
        }
        next.push_back(std::move(u));
      }
    }
    if (best) return *best <= cap ? best : std::nullopt;
    grow.frontier = std::move(next);
  }
  return std::nullopt;
}

IndexList ball(const GeneratorSet& R, Index center, Index radius) {
  IndexList out;
  bfs_layers(R, center, radius, [&](Index v, Index) {
    out.push_back(v);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

IndexList ball_of_set(const GeneratorSet& R, const IndexList& points, Index radius) {
  IndexList out;
  for (Index p : points) {
    IndexList b = ball(R, p, radius);
    out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace harem
