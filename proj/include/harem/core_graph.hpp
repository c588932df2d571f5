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

#ifndef HAREM_CORE_GRAPH_HPP_
#define HAREM_CORE_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace harem {

using Index = std::uint64_t;
// Sorted, duplicate-free sequence of vertex indices.
using IndexList = std::vector<Index>;
using IndexSet = std::unordered_set<Index>;

enum class Side { kLeft, kRight };

constexpr Side opposite(Side s) {
  return s == Side::kLeft ? Side::kRight : Side::kLeft;
}

struct Vertex {
  Side side = Side::kLeft;
  Index index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

// A possibly infinite, locally finite bipartite graph presented by
// procedures. Both sides are copies of the naturals. `neighbors` must be
// pure and return ascending opposite-side indices; `degree` must agree with
// the length of that output.
//
// `contains` and `bound` describe finite graphs: a vertex exists iff
// contains() holds, and every existing index on a side is below bound(side).
// Infinite oracles leave them empty (every index exists).
struct BipartiteOracle {
  std::function<IndexList(const Vertex&)> neighbors;
  std::function<std::size_t(const Vertex&)> degree;
  std::string name;
  std::function<bool(const Vertex&)> contains;
  std::function<std::optional<Index>(Side)> bound;

  bool has_vertex(const Vertex& v) const { return !contains || contains(v); }
  std::optional<Index> index_bound(Side s) const {
    return bound ? bound(s) : std::nullopt;
  }
};

// Finite bipartite graph on explicitly listed left and right indices.
class FiniteBipartiteGraph {
 public:
  FiniteBipartiteGraph() = default;

  // Builds from (left, sorted right list) rows. Right ids are the union of
  // the listed neighbors plus `extra_right`. Throws std::invalid_argument on
  // unsorted or duplicated input.
  static FiniteBipartiteGraph from_rows(
      std::vector<std::pair<Index, IndexList>> rows,
      const IndexList& extra_right = {});

  const IndexList& left_ids() const { return left_ids_; }
  const IndexList& right_ids() const { return right_ids_; }
  // Neighbors of the left vertex at position `pos` in left_ids().
  const IndexList& adjacency_at(std::size_t pos) const { return adj_[pos]; }
  // Neighbors of a left id; empty if the id is absent.
  const IndexList& neighbors_of_left(Index left) const;

  std::optional<std::size_t> left_position(Index left) const;
  std::optional<std::size_t> right_position(Index right) const;
  bool has_left(Index left) const { return left_position(left).has_value(); }
  bool has_right(Index right) const {
    return right_position(right).has_value();
  }
  bool has_edge(Index left, Index right) const;
  std::size_t edge_count() const;

  // Right-side adjacency, computed on demand.
  std::vector<IndexList> right_adjacency() const;

  friend bool operator==(const FiniteBipartiteGraph&,
                         const FiniteBipartiteGraph&) = default;

 private:
  IndexList left_ids_;
  IndexList right_ids_;
  std::vector<IndexList> adj_;
};

// Wraps a finite graph as an oracle. The graph is shared by value.
BipartiteOracle as_oracle(FiniteBipartiteGraph graph,
                          std::string name = "finite");

struct BallSubgraph {
  FiniteBipartiteGraph graph;
  Vertex pivot;
  Index radius = 0;
  IndexList shell_right;     // right vertices at exactly `radius`
  IndexList interior_right;  // right_ids minus shell_right
};

// Breadth-first ball around `pivot` in the graph obtained from `oracle` by
// deleting the removed vertices. Removed vertices are neither visited nor
// traversed. `max_vertices` aborts with BallBudgetExceeded when the ball
// grows past it (0 disables the check).
BallSubgraph extract_ball(const BipartiteOracle& oracle,
                          const IndexSet& removed_left,
                          const IndexSet& removed_right, const Vertex& pivot,
                          Index radius, std::size_t max_vertices = 0);

// Reads the .bg text format. Throws ParseError.
FiniteBipartiteGraph load_finite_graph(std::istream& in);
FiniteBipartiteGraph load_finite_graph_string(const std::string& text);
// Inverse of load_finite_graph (optionally with a `k` header).
std::string dump_finite_graph(const FiniteBipartiteGraph& g,
                              std::optional<unsigned> k = std::nullopt);
// Value of the optional `k <int>` header, if present.
std::optional<unsigned> read_k_header(const std::string& text);

// Pairs (i, j), i, j <= bound, where j in N(Left i) xor i in N(Right j).
std::vector<std::pair<Index, Index>> check_symmetry(
    const BipartiteOracle& oracle, Index bound);

// Vertices with index <= bound whose degree() disagrees with neighbors().
std::vector<Vertex> check_degrees(const BipartiteOracle& oracle, Index bound);

}  // namespace harem

#endif  // HAREM_CORE_GRAPH_HPP_
