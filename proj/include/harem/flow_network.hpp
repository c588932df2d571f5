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

#ifndef HAREM_FLOW_NETWORK_HPP_
#define HAREM_FLOW_NETWORK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace harem {

// Residual network with integer capacities. Arcs are stored in pairs:
// arc 2i is a forward arc and 2i+1 its reverse. Every traversal visits
// the out-arcs of a node in insertion order, so all results are
// reproducible.
class FlowNetwork {
 public:
  using Cap = std::int64_t;
  using Node = std::size_t;
  using Arc = std::size_t;

  explicit FlowNetwork(std::size_t nodes) : out_(nodes), level_(nodes) {}

  std::size_t node_count() const { return out_.size(); }
  Arc add_arc(Node from, Node to, Cap cap);

  Node head(Arc a) const { return head_[a]; }
  Node tail(Arc a) const { return head_[a ^ 1]; }
  Cap residual(Arc a) const { return cap_[a]; }
  void set_residual(Arc a, Cap c) { cap_[a] = c; }
  static Arc reverse(Arc a) { return a ^ 1; }

  // Dinic's algorithm from s to t, added on top of the current residual
  // state. Returns the amount pushed.
  Cap max_flow(Node s, Node t);

  // Breadth-first search for a residual path from s to t (s != t).
  // Returns the arcs of the path in order.
  std::optional<std::vector<Arc>> find_path(Node s, Node t);

  void push(const std::vector<Arc>& path, Cap amount);
  void push(Arc a, Cap amount) {
    cap_[a] -= amount;
    cap_[a ^ 1] += amount;
  }

 private:
  bool build_levels(Node s, Node t);
  Cap blocking_flow(Node s, Node t);

  std::vector<std::vector<Arc>> out_;
  std::vector<Node> head_;
  std::vector<Cap> cap_;
  std::vector<std::int64_t> level_;
  std::vector<std::size_t> cursor_;
  // Visit stamps for find_path; bumping the generation clears them.
  std::vector<std::uint32_t> seen_;
  std::vector<Arc> parent_;
  std::uint32_t generation_ = 0;
};

}  // namespace harem

#endif  // HAREM_FLOW_NETWORK_HPP_
