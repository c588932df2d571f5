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

#include "harem/pseudogroup.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "harem/errors.hpp"

namespace harem {

PartialBijection identity_pb() {
  auto all = [](Index) { return true; };
  auto id = [](Index x) { return x; };
  return {all, id, id, all, 0};
}

PartialBijection translation_pb(const Word& w) {
  auto e = std::make_shared<const Enumeration>(w.rank());
  Word wi = inv(w);
  auto all = [](Index) { return true; };
  return {all, [e, w](Index x) { return act(*e, w, x); },
          [e, wi](Index y) { return act(*e, wi, y); }, all, w.length()};
}

PartialBijection compose_pb(PartialBijection first, PartialBijection second) {
  PartialBijection out;
  out.domain = [first, second](Index x) {
    return first.domain(x) && second.domain(first.map(x));
  };
  out.map = [first, second](Index x) { return second.map(first.map(x)); };
  out.inverse_map = [first, second](Index y) {
    return first.inverse_map(second.inverse_map(y));
  };
  out.range = [first, second](Index y) {
    return second.range(y) && first.range(second.inverse_map(y));
  };
  if (first.displacement_bound && second.displacement_bound) {
    out.displacement_bound = *first.displacement_bound + *second.displacement_bound;
  }
  return out;
}

PartialBijection invert_pb(PartialBijection p) {
  return {p.range, p.inverse_map, p.map, p.domain, p.displacement_bound};
}

PartialBijection restrict_pb(PartialBijection p, std::function<bool(Index)> subset) {
  PartialBijection out;
  out.domain = [p, subset](Index x) { return p.domain(x) && subset(x); };
  out.map = p.map;
  out.inverse_map = p.inverse_map;
  out.range = [p, subset](Index y) { return p.range(y) && subset(p.inverse_map(y)); };
  out.displacement_bound = p.displacement_bound;
  return out;
}

namespace {

// Index of the unique part whose test accepts x, or nullopt.
template <typename Test>
std::optional<std::size_t> unique_part(const std::vector<PartialBijection>& parts,
                                       Index x, Test&& test, const char* what) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!test(parts[i], x)) continue;
    if (hit) throw DisjointnessViolation(x, std::string("overlapping ") + what);
    hit = i;
  }
  return hit;
}

bool in_domain(const PartialBijection& p, Index x) { return p.domain(x); }
bool in_range(const PartialBijection& p, Index y) { return p.range(y); }

}  // namespace

PartialBijection piecewise_pb(std::vector<PartialBijection> parts) {
  auto shared = std::make_shared<const std::vector<PartialBijection>>(std::move(parts));
  PartialBijection out;
  out.domain = [shared](Index x) {
    return unique_part(*shared, x, in_domain, "domains").has_value();
  };
  out.range = [shared](Index y) {
    return unique_part(*shared, y, in_range, "ranges").has_value();
  };
  out.map = [shared](Index x) {
    auto i = unique_part(*shared, x, in_domain, "domains");
    if (!i) throw std::domain_error("point outside every piece");
    return (*shared)[*i].map(x);
  };
  out.inverse_map = [shared](Index y) {
    auto i = unique_part(*shared, y, in_range, "ranges");
    if (!i) throw std::domain_error("point outside every piece's range");
    return (*shared)[*i].inverse_map(y);
  };
  std::optional<Index> bound = 0;
  for (const auto& p : *shared) {
    if (!p.displacement_bound) {
      bound.reset();
      break;
    }
    bound = std::max(*bound, *p.displacement_bound);
  }
  out.displacement_bound = bound;
  return out;
}

IndexList check_pb_window(const PartialBijection& p, Index window) {
  IndexList bad;
  for (Index x = 0; x < window; ++x) {
    if (!p.domain(x)) continue;
    Index y = p.map(x);
    if (!p.range(y) || p.inverse_map(y) != x) bad.push_back(x);
  }
  return bad;
}

IndexList check_displacement(const PartialBijection& p, const GeneratorSet& R,
                             Index window) {
  if (!p.displacement_bound) throw std::invalid_argument("no declared displacement bound");
  IndexList bad;
  for (Index x = 0; x < window; ++x) {
    if (!p.domain(x)) continue;
    if (!d_R(R, x, p.map(x), *p.displacement_bound)) bad.push_back(x);
  }
  return bad;
}

}  // namespace harem
