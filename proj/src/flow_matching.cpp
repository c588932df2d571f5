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

#include "harem/flow_matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "harem/errors.hpp"
#include "harem/flow_network.hpp"

namespace harem {

namespace {

bool is_sorted_unique(const IndexList& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) ==
         xs.end();
}

bool contains(const IndexList& xs, Index x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

const IndexList kNoStar;

const IndexList& star_or_empty(const HaremMatching& m, Index left) {
  auto it = m.stars.find(left);
  return it == m.stars.end() ? kNoStar : it->second;
}

enum class RightRole : std::uint8_t { kExcluded, kRequired, kOptional };

// Circulation with lower bounds on
//   source -> left -> right -> sink -> source,
// reduced to max flow between an auxiliary source/sink pair.
class HaremNetwork {
 public:
  explicit HaremNetwork(const MatchingRequest& req)
      : req_(req),
        g_(req.graph),
        n_left_(g_.left_ids().size()),
        n_right_(g_.right_ids().size()),
        net_(n_left_ + n_right_ + 4) {
    const FlowNetwork::Cap k = req.k;
    role_.assign(n_right_, RightRole::kExcluded);
    for (Index r : req.required_right) role_[*g_.right_position(r)] = RightRole::kRequired;
    for (Index r : req.optional_right) role_[*g_.right_position(r)] = RightRole::kOptional;
    required_left_.assign(n_left_, false);
    for (Index l : req.required_left) required_left_[*g_.left_position(l)] = true;

    std::vector<FlowNetwork::Cap> excess(net_.node_count(), 0);
    auto bounded_arc = [&](std::size_t u, std::size_t v, FlowNetwork::Cap lo,
                           FlowNetwork::Cap hi) {
      excess[v] += lo;
      excess[u] -= lo;
      return net_.add_arc(u, v, hi - lo);
    };

    edge_arcs_.resize(n_left_);
    edge_rights_.resize(n_left_);
    for (std::size_t p = 0; p < n_left_; ++p) {
      bounded_arc(kSource, left_node(p), required_left_[p] ? k : 0, k);
      for (Index r : g_.adjacency_at(p)) {
        std::size_t q = *g_.right_position(r);
        if (role_[q] == RightRole::kExcluded) continue;
        edge_arcs_[p].push_back(net_.add_arc(left_node(p), right_node(q), 1));
        edge_rights_[p].push_back(r);
      }
      fixed_.emplace_back(edge_arcs_[p].size(), -1);
    }
    for (std::size_t q = 0; q < n_right_; ++q) {
      if (role_[q] == RightRole::kExcluded) continue;
      bounded_arc(right_node(q), kSink, role_[q] == RightRole::kRequired, 1);
    }
    net_.add_arc(kSink, kSource, std::numeric_limits<FlowNetwork::Cap>::max() / 4);

    const std::size_t ss = aux_source(), st = aux_sink();
    for (std::size_t v = 0; v < ss; ++v) {
      if (excess[v] > 0) {
        aux_arcs_.push_back(net_.add_arc(ss, v, excess[v]));
        demand_ += excess[v];
      } else if (excess[v] < 0) {
        aux_arcs_.push_back(net_.add_arc(v, st, -excess[v]));
      }
    }
  }

  bool find_feasible() {
    if (net_.max_flow(aux_source(), aux_sink()) != demand_) return false;
    // The auxiliary arcs are saturated; pin them so no later cycle can
    // undo the lower bounds.
    for (auto a : aux_arcs_) {
      net_.set_residual(a, 0);
      net_.set_residual(FlowNetwork::reverse(a), 0);
    }
    return true;
  }

  // Greedy lexicographic minimisation, one left vertex at a time, moving
  // between feasible flows along residual cycles.
  void canonicalize_through(Index through) {
    for (std::size_t p = 0; p < n_left_; ++p) {
      if (g_.left_ids()[p] > through) break;
      canonicalize_left(p);
    }
  }

  HaremMatching extract() const {
    HaremMatching m;
    for (std::size_t p = 0; p < n_left_; ++p) {
      IndexList star;
      for (std::size_t e = 0; e < edge_arcs_[p].size(); ++e) {
        if (edge_flow(p, e) > 0) star.push_back(edge_rights_[p][e]);
      }
      if (!star.empty()) m.stars.emplace(g_.left_ids()[p], std::move(star));
    }
    return m;
  }

 private:
  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;
  std::size_t left_node(std::size_t p) const { return 2 + p; }
  std::size_t right_node(std::size_t q) const { return 2 + n_left_ + q; }
  std::size_t aux_source() const { return 2 + n_left_ + n_right_; }
  std::size_t aux_sink() const { return aux_source() + 1; }

  FlowNetwork::Cap flow(FlowNetwork::Arc a) const {
    return net_.residual(FlowNetwork::reverse(a));
  }
  // Edge arcs are unit capacity; a frozen arc keeps its flow in fixed_.
  FlowNetwork::Cap edge_flow(std::size_t p, std::size_t e) const {
    return fixed_[p][e] >= 0 ? fixed_[p][e] : flow(edge_arcs_[p][e]);
  }
  void freeze(std::size_t p, std::size_t e) {
    FlowNetwork::Arc a = edge_arcs_[p][e];
    fixed_[p][e] = static_cast<std::int8_t>(edge_flow(p, e));
    net_.set_residual(a, 0);
    net_.set_residual(FlowNetwork::reverse(a), 0);
  }

  // Reroutes flow so that edge arc `a` (tail u, head v) carries one unit,
  // via a residual path v -> u. Returns false if no feasible flow uses it.
  bool try_include(FlowNetwork::Arc a) {
    if (flow(a) > 0) return true;
    auto path = net_.find_path(net_.head(a), net_.tail(a));
    if (!path) return false;
    net_.push(*path, 1);
    net_.push(a, 1);
    return true;
  }

  // Tries to zero the flow on the still-open edges [from, end) of left p.
  bool try_close(std::size_t p, std::size_t from) {
    const auto& arcs = edge_arcs_[p];
    for (std::size_t e = from; e < arcs.size(); ++e) net_.set_residual(arcs[e], 0);
    bool ok = true;
    for (std::size_t e = from; e < arcs.size() && ok; ++e) {
      if (flow(arcs[e]) == 0) continue;
      auto path = net_.find_path(net_.tail(arcs[e]), net_.head(arcs[e]));
      if (!path) {
        ok = false;
        break;
      }
      net_.push(*path, 1);
      net_.push(FlowNetwork::reverse(arcs[e]), 1);
      net_.set_residual(arcs[e], 0);
    }
    if (!ok) {
      for (std::size_t e = from; e < arcs.size(); ++e) {
        net_.set_residual(arcs[e], 1 - flow(arcs[e]));
      }
    }
    return ok;
  }

  void canonicalize_left(std::size_t p) {
    const auto& arcs = edge_arcs_[p];
    unsigned chosen = 0;
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (chosen == req_.k || (!required_left_[p] && try_close(p, e))) {
        for (std::size_t f = e; f < arcs.size(); ++f) freeze(p, f);
        return;
      }
      if (try_include(arcs[e])) ++chosen;
      freeze(p, e);
    }
  }

  const MatchingRequest& req_;
  const FiniteBipartiteGraph& g_;
  std::size_t n_left_, n_right_;
  FlowNetwork net_;
  std::vector<RightRole> role_;
  std::vector<bool> required_left_;
  std::vector<std::vector<FlowNetwork::Arc>> edge_arcs_;
  std::vector<IndexList> edge_rights_;
  std::vector<std::vector<std::int8_t>> fixed_;
  std::vector<FlowNetwork::Arc> aux_arcs_;
  FlowNetwork::Cap demand_ = 0;
};

}  // namespace

MatchingRequest MatchingRequest::all_required(FiniteBipartiteGraph graph,
                                              unsigned k) {
  MatchingRequest req;
  req.required_left = graph.left_ids();
  req.required_right = graph.right_ids();
  req.graph = std::move(graph);
  req.k = k;
  return req;
}

void MatchingRequest::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (const IndexList* xs : {&required_left, &required_right, &optional_right}) {
    if (!is_sorted_unique(*xs)) {
      throw std::invalid_argument("request index lists must be strictly increasing");
    }
  }
  for (Index l : required_left) {
    if (!graph.has_left(l)) {
      throw std::invalid_argument("required left " + std::to_string(l) + " not in graph");
    }
  }
  for (const IndexList* xs : {&required_right, &optional_right}) {
    for (Index r : *xs) {
      if (!graph.has_right(r)) {
        throw std::invalid_argument("right " + std::to_string(r) + " not in graph");
      }
    }
  }
  for (Index r : optional_right) {
    if (contains(required_right, r)) {
      throw std::invalid_argument("right " + std::to_string(r) +
                                  " is both required and optional");
    }
  }
}

std::map<Index, Index> HaremMatching::inverse() const {
  std::map<Index, Index> inv;
  for (const auto& [l, star] : stars) {
    for (Index r : star) inv.try_emplace(r, l);
  }
  return inv;
}

std::size_t HaremMatching::edge_count() const {
  std::size_t n = 0;
  for (const auto& [l, star] : stars) n += star.size();
  return n;
}

bool star_map_less(const HaremMatching& a, const HaremMatching& b) {
  auto ia = a.stars.begin(), ib = b.stars.begin();
  while (ia != a.stars.end() || ib != b.stars.end()) {
    Index key;
    if (ia == a.stars.end()) {
      key = ib->first;
    } else if (ib == b.stars.end()) {
      key = ia->first;
    } else {
      key = std::min(ia->first, ib->first);
    }
    const IndexList& sa = star_or_empty(a, key);
    const IndexList& sb = star_or_empty(b, key);
    if (sa != sb) return sa < sb;
    if (ia != a.stars.end() && ia->first == key) ++ia;
    if (ib != b.stars.end() && ib->first == key) ++ib;
  }
  return false;
}

std::optional<HaremMatching> solve_harem_prefix(const MatchingRequest& req,
                                                Index through) {
  req.validate();
  HaremNetwork net(req);
  if (!net.find_feasible()) return std::nullopt;
  net.canonicalize_through(through);
  return net.extract();
}

std::optional<HaremMatching> solve_harem(const MatchingRequest& req) {
  return solve_harem_prefix(req, std::numeric_limits<Index>::max());
}

std::vector<HaremMatching> brute_force_harem(const MatchingRequest& req) {
  req.validate();
  const auto& g = req.graph;
  if (g.left_ids().size() > kBruteForceMaxLeft ||
      g.right_ids().size() > kBruteForceMaxRight) {
    throw SizeGuardError("brute_force_harem is limited to 6 left and 12 right vertices");
  }
  const auto right_adj = g.right_adjacency();
  const std::size_t nr = g.right_ids().size();
  std::vector<RightRole> role(nr, RightRole::kExcluded);
  for (Index r : req.required_right) role[*g.right_position(r)] = RightRole::kRequired;
  for (Index r : req.optional_right) role[*g.right_position(r)] = RightRole::kOptional;

  // owner[q] = position of the left partner of right q, or npos.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(nr, npos);
  std::vector<unsigned> load(g.left_ids().size(), 0);
  std::vector<HaremMatching> out;

  auto emit = [&] {
    for (Index l : req.required_left) {
      if (load[*g.left_position(l)] != req.k) return;
    }
    HaremMatching m;
    for (std::size_t q = 0; q < nr; ++q) {
      if (owner[q] != npos) m.stars[g.left_ids()[owner[q]]].push_back(g.right_ids()[q]);
    }
    out.push_back(std::move(m));
  };

  std::function<void(std::size_t)> assign = [&](std::size_t q) {
    if (q == nr) {
      emit();
      return;
    }
    if (role[q] != RightRole::kRequired) assign(q + 1);
    if (role[q] == RightRole::kExcluded) return;
    for (Index l : right_adj[q]) {
      std::size_t p = *g.left_position(l);
      if (load[p] == req.k) continue;
      owner[q] = p;
      ++load[p];
      assign(q + 1);
      --load[p];
      owner[q] = npos;
    }
  };
  assign(0);
  std::sort(out.begin(), out.end(), star_map_less);
  return out;
}

namespace {

// Calls visit(size, |N|) for every non-empty subset of `masks`' index set,
// where N is the union of the masks of its members.
template <typename Visit>
void for_each_subset(const std::vector<std::uint32_t>& masks, Visit&& visit) {
  const std::size_t n = masks.size();
  // Iterative depth-first walk carrying the running union.
  std::vector<std::uint32_t> unions(n + 1, 0);
  std::vector<std::size_t> picks;
  picks.reserve(n);
  std::size_t next = 0;
  while (true) {
    if (next < n) {
      unions[picks.size() + 1] = unions[picks.size()] | masks[next];
      picks.push_back(next);
      visit(picks.size(), static_cast<std::size_t>(std::popcount(unions[picks.size()])));
      ++next;
      continue;
    }
    if (picks.empty()) break;
    next = picks.back() + 1;
    picks.pop_back();
  }
}

struct SideMasks {
  std::vector<std::uint32_t> left;   // per left: bitmask over right positions
  std::vector<std::uint32_t> right;  // per right: bitmask over left positions
};

SideMasks side_masks(const FiniteBipartiteGraph& g) {
  if (g.left_ids().size() > kHallMaxSide || g.right_ids().size() > kHallMaxSide) {
    throw SizeGuardError("Hall checks are limited to 24 vertices per side");
  }
  SideMasks m;
  m.left.assign(g.left_ids().size(), 0);
  m.right.assign(g.right_ids().size(), 0);
  for (std::size_t p = 0; p < g.left_ids().size(); ++p) {
    for (Index r : g.adjacency_at(p)) {
      std::size_t q = *g.right_position(r);
      m.left[p] |= std::uint32_t{1} << q;
      m.right[q] |= std::uint32_t{1} << p;
    }
  }
  return m;
}

}  // namespace

bool check_hall_harem(const FiniteBipartiteGraph& graph, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SideMasks m = side_masks(graph);
  bool ok = true;
  for_each_subset(m.left, [&](std::size_t size, std::size_t nbrs) {
    if (nbrs < k * size) ok = false;
  });
  if (!ok) return false;
  for_each_subset(m.right, [&](std::size_t size, std::size_t nbrs) {
    if (k * nbrs < size) ok = false;
  });
  return ok;
}

bool check_cehhc_witness(const FiniteBipartiteGraph& graph, unsigned k,
                         const std::function<std::uint64_t(std::uint64_t)>& h,
                         std::uint64_t n_max) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (h(0) != 0) throw WitnessError("margin function must satisfy h(0) = 0");
  SideMasks m = side_masks(graph);
  // best[s] = largest n <= n_max with h(n) <= s; the inequality for every
  // smaller qualifying n follows from the one for best[s].
  const std::size_t max_size = std::max(m.left.size(), m.right.size());
  std::vector<std::int64_t> best(max_size + 1, -1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::uint64_t hn = h(n);
    for (std::size_t s = 1; s <= max_size; ++s) {
      if (hn <= s) best[s] = static_cast<std::int64_t>(n);
    }
    if (n == std::numeric_limits<std::uint64_t>::max()) break;
  }
  const std::int64_t kk = k;
  bool ok = true;
  for_each_subset(m.left, [&](std::size_t size, std::size_t nbrs) {
    std::int64_t slack = static_cast<std::int64_t>(nbrs) - kk * static_cast<std::int64_t>(size);
    if (best[size] > slack) ok = false;
  });
  if (!ok) return false;
  for_each_subset(m.right, [&](std::size_t size, std::size_t nbrs) {
    // n <= |N(Y)| - |Y|/k  <=>  k*n <= k*|N(Y)| - |Y|
    std::int64_t scaled = kk * static_cast<std::int64_t>(nbrs) - static_cast<std::int64_t>(size);
    if (kk * best[size] > scaled) ok = false;
  });
  return ok;
}

std::string MatchingViolation::describe() const {
  switch (kind) {
    case Kind::kNonEdge:
      return "non-edge " + std::to_string(left) + " -> " + std::to_string(right);
    case Kind::kStarSize:
      return "left " + std::to_string(left) + " has " + std::to_string(count) + " partners";
    case Kind::kRightUncovered:
      return "right " + std::to_string(right) + " uncovered";
    case Kind::kRightOvercovered:
      return "right " + std::to_string(right) + " covered " + std::to_string(count) + " times";
  }
  return "unknown violation";
}

MatchingReport verify_matching(const MatchingRequest& req, const HaremMatching& m) {
  MatchingReport rep;
  using K = MatchingViolation::Kind;
  std::map<Index, std::size_t> cover;
  for (const auto& [l, star] : m.stars) {
    for (Index r : star) {
      if (!req.graph.has_edge(l, r)) rep.violations.push_back({K::kNonEdge, l, r, 0});
      ++cover[r];
    }
  }
  for (Index l : req.graph.left_ids()) {
    std::size_t got = star_or_empty(m, l).size();
    bool required = contains(req.required_left, l);
    if ((required && got != req.k) || got > req.k) {
      rep.violations.push_back({K::kStarSize, l, 0, got});
    }
  }
  for (const auto& [l, star] : m.stars) {
    if (!req.graph.has_left(l)) rep.violations.push_back({K::kStarSize, l, 0, star.size()});
  }
  for (Index r : req.required_right) {
    if (!cover.count(r)) rep.violations.push_back({K::kRightUncovered, 0, r, 0});
  }
  for (const auto& [r, c] : cover) {
    if (c > 1) rep.violations.push_back({K::kRightOvercovered, 0, r, c});
  }
  return rep;
}

}  // namespace harem
