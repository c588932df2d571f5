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

// Small helpers shared by the test binaries: random graph generators and
// brute-force reference implementations that do not reuse library code.

#ifndef HAREM_TESTS_TEST_UTIL_HPP_
#define HAREM_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "harem/core_graph.hpp"

namespace harem::testing {

// Random graph on left {0..nl-1}, right {0..nr-1}; each edge present with
// probability p. Rights without edges are still part of the graph.
inline FiniteBipartiteGraph random_graph(std::mt19937_64& rng, std::size_t nl,
                                         std::size_t nr, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Index, IndexList>> rows;
  IndexList all_right;
  for (Index r = 0; r < nr; ++r) all_right.push_back(r);
  for (Index l = 0; l < nl; ++l) {
    IndexList nbrs;
    for (Index r = 0; r < nr; ++r) {
      if (coin(rng)) nbrs.push_back(r);
    }
    rows.emplace_back(l, std::move(nbrs));
  }
  return FiniteBipartiteGraph::from_rows(std::move(rows), all_right);
}

// Graph from a bit pattern: bit (l * nr + r) set means edge (l, r).
inline FiniteBipartiteGraph graph_from_bits(std::uint64_t bits, std::size_t nl,
                                            std::size_t nr) {
  std::vector<std::pair<Index, IndexList>> rows;
  IndexList all_right;
  for (Index r = 0; r < nr; ++r) all_right.push_back(r);
  for (Index l = 0; l < nl; ++l) {
    IndexList nbrs;
    for (Index r = 0; r < nr; ++r) {
      if (bits >> (l * nr + r) & 1) nbrs.push_back(r);
    }
    rows.emplace_back(l, std::move(nbrs));
  }
  return FiniteBipartiteGraph::from_rows(std::move(rows), all_right);
}

// Plain edge-list BFS distances from a vertex, skipping removed vertices.
// Keys are (side, index) with side 0 = left.
inline std::map<std::pair<int, Index>, Index> reference_distances(
    const std::set<std::pair<Index, Index>>& edges,
    const std::set<Index>& removed_left, const std::set<Index>& removed_right,
    std::pair<int, Index> start, Index radius) {
  std::map<std::pair<int, Index>, Index> dist{{start, 0}};
  std::vector<std::pair<int, Index>> frontier{start};
  for (Index d = 1; d <= radius; ++d) {
    std::vector<std::pair<int, Index>> next;
    for (auto [side, v] : frontier) {
      for (auto [l, r] : edges) {
        std::pair<int, Index> u;
        if (side == 0 && l == v) {
          if (removed_right.count(r)) continue;
          u = {1, r};
        } else if (side == 1 && r == v) {
          if (removed_left.count(l)) continue;
          u = {0, l};
        } else {
          continue;
        }
        if (dist.emplace(u, d).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

// String model of a free group of rank <= 26: lowercase letters are
// generators, uppercase their inverses.
inline char inverse_char(char c) {
  return c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A')
                              : static_cast<char>(c - 'A' + 'a');
}

// Cancels adjacent inverse pairs until none remain (no stack).
inline std::string reduce_fixpoint(std::string w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == inverse_char(w[i])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::string invert_string(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inverse_char(c);
  return out;
}

// All reduced words of length <= max_len in shortlex order with
// a < A < b < B < ...
inline std::vector<std::string> shortlex_words(unsigned rank, std::size_t max_len) {
  std::string alphabet;
  for (unsigned g = 0; g < rank; ++g) {
    alphabet += static_cast<char>('a' + g);
    alphabet += static_cast<char>('A' + g);
  }
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : alphabet) {
        if (!w.empty() && c == inverse_char(w.back())) continue;
        next.push_back(w + c);
      }
    }
    // Appending letters in alphabet order to a sorted layer keeps it sorted.
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace harem::testing

#endif  // HAREM_TESTS_TEST_UTIL_HPP_
