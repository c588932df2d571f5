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

#include "harem/flow_network.hpp"

#include <algorithm>
#include <limits>

namespace harem {

FlowNetwork::Arc FlowNetwork::add_arc(Node from, Node to, Cap cap) {
  Arc a = head_.size();
  head_.push_back(to);
  cap_.push_back(cap);
  head_.push_back(from);
  cap_.push_back(0);
  out_[from].push_back(a);
  out_[to].push_back(a + 1);
  return a;
}

bool FlowNetwork::build_levels(Node s, Node t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<Node> queue{s};
  level_[s] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Node u = queue[q];
    for (Arc a : out_[u]) {
      Node v = head_[a];
      if (cap_[a] > 0 && level_[v] < 0) {
        level_[v] = level_[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level_[t] >= 0;
}

FlowNetwork::Cap FlowNetwork::blocking_flow(Node s, Node t) {
  cursor_.assign(out_.size(), 0);
  Cap total = 0;
  std::vector<Arc> stack;
  Node u = s;
  while (true) {
    if (u == t) {
      Cap amount = std::numeric_limits<Cap>::max();
      for (Arc a : stack) amount = std::min(amount, cap_[a]);
      for (Arc a : stack) push(a, amount);
      total += amount;
      // Retreat to the tail of the first saturated arc.
      std::size_t keep = 0;
      while (keep < stack.size() && cap_[stack[keep]] > 0) ++keep;
      stack.resize(keep);
      u = stack.empty() ? s : head_[stack.back()];
      continue;
    }
    bool advanced = false;
    for (std::size_t& c = cursor_[u]; c < out_[u].size(); ++c) {
      Arc a = out_[u][c];
      Node v = head_[a];
      if (cap_[a] > 0 && level_[v] == level_[u] + 1) {
        stack.push_back(a);
        u = v;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (u == s) break;
    // Dead end: prune u from the level graph and back up.
    level_[u] = -1;
    stack.pop_back();
    u = stack.empty() ? s : head_[stack.back()];
    ++cursor_[u];
  }
  return total;
}

FlowNetwork::Cap FlowNetwork::max_flow(Node s, Node t) {
  Cap total = 0;
  while (build_levels(s, t)) total += blocking_flow(s, t);
  return total;
}

std::optional<std::vector<FlowNetwork::Arc>> FlowNetwork::find_path(Node s,
                                                                  Node t) {
  if (seen_.size() != out_.size()) {
    seen_.assign(out_.size(), 0);
    parent_.assign(out_.size(), 0);
    generation_ = 0;
  }
  if (++generation_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    generation_ = 1;
  }
  std::vector<Node> queue{s};
  seen_[s] = generation_;
  bool found = false;
  for (std::size_t q = 0; q < queue.size() && !found; ++q) {
    Node u = queue[q];
    for (Arc a : out_[u]) {
      Node v = head_[a];
      if (cap_[a] <= 0 || seen_[v] == generation_) continue;
      seen_[v] = generation_;
      parent_[v] = a;
      if (v == t) {
        found = true;
        break;
      }
      queue.push_back(v);
    }
  }
  if (!found) return std::nullopt;
  std::vector<Arc> path;
  for (Node v = t; v != s; v = tail(parent_[v])) path.push_back(parent_[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

void FlowNetwork::push(const std::vector<Arc>& path, Cap amount) {
  for (Arc a : path) push(a, amount);
}

}  // namespace harem
