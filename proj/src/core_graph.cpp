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

#include "harem/core_graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "harem/errors.hpp"

namespace harem {

std::string to_string(const Vertex& v) {
  return (v.side == Side::kLeft ? "L" : "R") + std::to_string(v.index);
}

namespace {

bool strictly_increasing(const IndexList& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) ==
         xs.end();
}

bool sorted_contains(const IndexList& xs, Index x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

const IndexList kEmpty;

}  // namespace

FiniteBipartiteGraph FiniteBipartiteGraph::from_rows(
    std::vector<std::pair<Index, IndexList>> rows,
    const IndexList& extra_right) {
  FiniteBipartiteGraph g;
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  IndexList right = extra_right;
  for (auto& [left, nbrs] : rows) {
    if (!g.left_ids_.empty() && g.left_ids_.back() == left) {
      throw std::invalid_argument("duplicate left vertex " +
                                  std::to_string(left));
    }
    if (!strictly_increasing(nbrs)) {
      throw std::invalid_argument("neighbors of left " + std::to_string(left) +
                                  " not strictly increasing");
    }
    right.insert(right.end(), nbrs.begin(), nbrs.end());
    g.left_ids_.push_back(left);
    g.adj_.push_back(std::move(nbrs));
  }
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  g.right_ids_ = std::move(right);
  return g;
}

std::optional<std::size_t> FiniteBipartiteGraph::left_position(
    Index left) const {
  auto it = std::lower_bound(left_ids_.begin(), left_ids_.end(), left);
  if (it == left_ids_.end() || *it != left) return std::nullopt;
  return static_cast<std::size_t>(it - left_ids_.begin());
}

std::optional<std::size_t> FiniteBipartiteGraph::right_position(
    Index right) const {
  auto it = std::lower_bound(right_ids_.begin(), right_ids_.end(), right);
  if (it == right_ids_.end() || *it != right) return std::nullopt;
  return static_cast<std::size_t>(it - right_ids_.begin());
}

const IndexList& FiniteBipartiteGraph::neighbors_of_left(Index left) const {
  auto pos = left_position(left);
  return pos ? adj_[*pos] : kEmpty;
}

bool FiniteBipartiteGraph::has_edge(Index left, Index right) const {
  return sorted_contains(neighbors_of_left(left), right);
}

std::size_t FiniteBipartiteGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adj_) n += a.size();
  return n;
}

std::vector<IndexList> FiniteBipartiteGraph::right_adjacency() const {
  std::vector<IndexList> out(right_ids_.size());
  // Left ids ascend, so each right list comes out sorted.
  for (std::size_t p = 0; p < left_ids_.size(); ++p) {
    for (Index r : adj_[p]) out[*right_position(r)].push_back(left_ids_[p]);
  }
  return out;
}

BipartiteOracle as_oracle(FiniteBipartiteGraph graph, std::string name) {
  struct Shared {
    FiniteBipartiteGraph g;
    std::vector<IndexList> right_adj;
  };
  auto s = std::make_shared<const Shared>(
      Shared{graph, graph.right_adjacency()});
  BipartiteOracle o;
  o.name = std::move(name);
  o.neighbors = [s](const Vertex& v) -> IndexList {
    if (v.side == Side::kLeft) return s->g.neighbors_of_left(v.index);
    auto pos = s->g.right_position(v.index);
    return pos ? s->right_adj[*pos] : IndexList{};
  };
  o.degree = [s](const Vertex& v) -> std::size_t {
    if (v.side == Side::kLeft) return s->g.neighbors_of_left(v.index).size();
    auto pos = s->g.right_position(v.index);
    return pos ? s->right_adj[*pos].size() : 0;
  };
  o.contains = [s](const Vertex& v) {
    return v.side == Side::kLeft ? s->g.has_left(v.index)
                                 : s->g.has_right(v.index);
  };
  o.bound = [s](Side side) -> std::optional<Index> {
    const IndexList& ids =
        side == Side::kLeft ? s->g.left_ids() : s->g.right_ids();
    return ids.empty() ? 0 : ids.back() + 1;
  };
  return o;
}

BallSubgraph extract_ball(const BipartiteOracle& oracle,
                          const IndexSet& removed_left,
                          const IndexSet& removed_right, const Vertex& pivot,
                          Index radius, std::size_t max_vertices) {
  if (radius < 1) throw ParityError("ball radius must be at least 1");
  const bool odd = radius % 2 == 1;
  if ((pivot.side == Side::kLeft) != odd) {
    throw ParityError("radius " + std::to_string(radius) +
                      " has the wrong parity for pivot " + to_string(pivot));
  }
  const IndexSet& removed_pivot_side =
      pivot.side == Side::kLeft ? removed_left : removed_right;
  if (removed_pivot_side.count(pivot.index)) {
    throw std::invalid_argument("pivot " + to_string(pivot) + " is removed");
  }

  // Distances per side; rows hold the (filtered) neighbor lists of every
  // expanded vertex.
  std::unordered_map<Index, Index> dist_left, dist_right;
  std::unordered_map<Index, IndexList> rows_left, rows_right;
  auto dist_of = [&](Side s) -> std::unordered_map<Index, Index>& {
    return s == Side::kLeft ? dist_left : dist_right;
  };
  auto removed = [&](Side s, Index i) {
    return (s == Side::kLeft ? removed_left : removed_right).count(i) > 0;
  };

  std::deque<Vertex> queue{pivot};
  dist_of(pivot.side)[pivot.index] = 0;
  std::size_t visited = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    Index d = dist_of(v.side).at(v.index);
    if (d == radius) continue;
    IndexList nbrs = oracle.neighbors(v);
    IndexList kept;
    kept.reserve(nbrs.size());
    Side other = opposite(v.side);
    for (Index u : nbrs) {
      if (removed(other, u)) continue;
      kept.push_back(u);
      auto [it, inserted] = dist_of(other).try_emplace(u, d + 1);
      if (inserted) {
        queue.push_back(Vertex{other, u});
        if (max_vertices != 0 && ++visited > max_vertices) {
          throw BallBudgetExceeded("ball around " + to_string(pivot) +
                                   " of radius " + std::to_string(radius) +
                                   " exceeds " + std::to_string(max_vertices) +
                                   " vertices");
        }
      }
    }
    (v.side == Side::kLeft ? rows_left : rows_right)[v.index] =
        std::move(kept);
  }

  // Every pair of expanded vertices must agree on their shared edge.
  for (const auto& [l, nbrs] : rows_left) {
    for (Index r : nbrs) {
      auto it = rows_right.find(r);
      if (it != rows_right.end() && !sorted_contains(it->second, l)) {
        throw OracleError("asymmetric edge (" + std::to_string(l) + "," +
                          std::to_string(r) + ") in oracle " + oracle.name);
      }
    }
  }
  for (const auto& [r, nbrs] : rows_right) {
    for (Index l : nbrs) {
      auto it = rows_left.find(l);
      if (it != rows_left.end() && !sorted_contains(it->second, r)) {
        throw OracleError("asymmetric edge (" + std::to_string(l) + "," +
                          std::to_string(r) + ") in oracle " + oracle.name);
      }
    }
  }

  // The outermost layer is always on the right, so every left vertex in the
  // ball was expanded and its row is its full residual neighborhood.
  std::vector<std::pair<Index, IndexList>> rows;
  rows.reserve(rows_left.size());
  for (auto& [l, nbrs] : rows_left) rows.emplace_back(l, std::move(nbrs));
  IndexList all_right;
  all_right.reserve(dist_right.size());
  for (const auto& [r, d] : dist_right) all_right.push_back(r);
  std::sort(all_right.begin(), all_right.end());

  BallSubgraph ball;
  ball.graph = FiniteBipartiteGraph::from_rows(std::move(rows), all_right);
  ball.pivot = pivot;
  ball.radius = radius;
  for (Index r : ball.graph.right_ids()) {
    (dist_right.at(r) == radius ? ball.shell_right : ball.interior_right)
        .push_back(r);
  }
  return ball;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Index parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line, "expected a natural number, got '" + tok + "'");
  }
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "index out of range: " + tok);
  }
}

}  // namespace

FiniteBipartiteGraph load_finite_graph(std::istream& in) {
  std::vector<std::pair<Index, IndexList>> rows;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == 'k' && (line.size() == 1 || line[1] == ' ')) {
      if (seen_data) throw ParseError(line_no, "k header after data lines");
      std::istringstream ks(line.substr(1));
      std::string tok, extra;
      ks >> tok;
      if (ks >> extra) throw ParseError(line_no, "trailing text after k");
      if (parse_index(tok, line_no) == 0) {
        throw ParseError(line_no, "k must be at least 1");
      }
      continue;
    }
    if (line[0] != 'A' || line.size() < 2 || line[1] != ' ') {
      throw ParseError(line_no, "expected 'A <i>: ...'");
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "missing ':'");
    Index left = parse_index(trim(line.substr(2, colon - 2)), line_no);
    if (!rows.empty() && left <= rows.back().first) {
      throw ParseError(line_no, rows.back().first == left
                                    ? "duplicate left vertex"
                                    : "left indices out of order");
    }
    std::istringstream ns(line.substr(colon + 1));
    IndexList nbrs;
    std::string tok;
    while (ns >> tok) {
      Index j = parse_index(tok, line_no);
      if (!nbrs.empty() && j <= nbrs.back()) {
        throw ParseError(line_no, j == nbrs.back() ? "duplicate edge"
                                                   : "neighbors out of order");
      }
      nbrs.push_back(j);
    }
    rows.emplace_back(left, std::move(nbrs));
    seen_data = true;
  }
  return FiniteBipartiteGraph::from_rows(std::move(rows));
}

FiniteBipartiteGraph load_finite_graph_string(const std::string& text) {
  std::istringstream in(text);
  return load_finite_graph(in);
}

std::optional<unsigned> read_k_header(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.size() > 2 && line[0] == 'k' && line[1] == ' ') {
      return static_cast<unsigned>(std::stoul(trim(line.substr(2))));
    }
  }
  return std::nullopt;
}

std::string dump_finite_graph(const FiniteBipartiteGraph& g,
                              std::optional<unsigned> k) {
  std::ostringstream out;
  if (k) out << "k " << *k << "\n";
  for (std::size_t p = 0; p < g.left_ids().size(); ++p) {
    out << "A " << g.left_ids()[p] << ":";
    for (Index r : g.adjacency_at(p)) out << " " << r;
    out << "\n";
  }
  return out.str();
}

std::vector<std::pair<Index, Index>> check_symmetry(
    const BipartiteOracle& oracle, Index bound) {
  std::vector<std::pair<Index, Index>> bad;
  for (Index i = 0; i <= bound; ++i) {
    for (Index j : oracle.neighbors(Vertex{Side::kLeft, i})) {
      if (j > bound) continue;
      if (!sorted_contains(oracle.neighbors(Vertex{Side::kRight, j}), i)) {
        bad.emplace_back(i, j);
      }
    }
  }
  for (Index j = 0; j <= bound; ++j) {
    for (Index i : oracle.neighbors(Vertex{Side::kRight, j})) {
      if (i > bound) continue;
      if (!sorted_contains(oracle.neighbors(Vertex{Side::kLeft, i}), j)) {
        bad.emplace_back(i, j);
      }
    }
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

std::vector<Vertex> check_degrees(const BipartiteOracle& oracle, Index bound) {
  std::vector<Vertex> bad;
  for (Side s : {Side::kLeft, Side::kRight}) {
    for (Index i = 0; i <= bound; ++i) {
      Vertex v{s, i};
      if (oracle.degree(v) != oracle.neighbors(v).size()) bad.push_back(v);
    }
  }
  return bad;
}

}  // namespace harem
