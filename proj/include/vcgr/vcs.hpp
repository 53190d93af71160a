// Copyright 2026 The vcgr Authors.
//
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

#ifndef VCGR_VCS_HPP_
#define VCGR_VCS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcgr/rng.hpp"
#include "vcgr/topology.hpp"

namespace vcgr {

enum class AnchorStrategy { kCorners, kRandom, kPerimeter };

inline AnchorStrategy parse_anchor_strategy(const std::string& s) {
  if (s == "corners") return AnchorStrategy::kCorners;
  if (s == "random") return AnchorStrategy::kRandom;
  if (s == "perimeter") return AnchorStrategy::kPerimeter;
  throw std::invalid_argument("unknown anchor strategy '" + s + "'");
}

inline const char* anchor_strategy_name(AnchorStrategy s) {
  switch (s) {
    case AnchorStrategy::kCorners: return "corners";
    case AnchorStrategy::kRandom: return "random";
    case AnchorStrategy::kPerimeter: return "perimeter";
  }
  return "?";
}

// Ordered anchor list; the order fixes the dimension order of every VC vector.
struct AnchorSet {
  std::vector<NodeId> anchors;

  std::size_t dimensions() const { return anchors.size(); }
};

// Per-node hop counts to each anchor, stored as one flat row-major block.
class VcTable {
 public:
  VcTable() = default;
  VcTable(AnchorSet anchor_set, std::size_t node_count)
      : anchor_set_(std::move(anchor_set)),
        k_(anchor_set_.anchors.size()),
        coords_(node_count * k_, 0) {}

  std::size_t node_count() const { return k_ == 0 ? 0 : coords_.size() / k_; }
  std::size_t dimensions() const { return k_; }
  const AnchorSet& anchor_set() const { return anchor_set_; }

  std::span<const int> vc(NodeId v) const { return {coords_.data() + v * k_, k_}; }
  std::span<int> vc_mutable(NodeId v) { return {coords_.data() + v * k_, k_}; }

 private:
  AnchorSet anchor_set_;
  std::size_t k_ = 0;
  std::vector<int> coords_;
};

struct VcZone {
  std::vector<int> coordinate;
  std::vector<NodeId> members;  // sorted ascending
  int span_hops = 0;            // max pairwise hop distance in the full graph
  bool connected = true;        // of the members' induced subgraph

  bool expanded() const { return span_hops >= 2; }
};

namespace detail {

// Stream-independent sub-seed for the random anchor draw, so anchor choice
// does not perturb any other consumer of the deployment seed.
inline constexpr std::uint64_t kAnchorSeedTag = 0x616e63686f727321ull;

inline NodeId nearest_unchosen(const Deployment& d, Point target,
                               const std::vector<bool>& chosen) {
  NodeId best = kNoNode;
  double best_d = 0.0;
  for (const auto& node : d.nodes) {
    if (chosen[node.id]) continue;
    const double dd = distance_sq(node.true_pos, target);
    if (best == kNoNode || dd < best_d) {
      best = node.id;
      best_d = dd;
    }
  }
  return best;
}

inline Point boundary_point(double w, double h, double offset) {
  // Walk the rectangle boundary counterclockwise from (0,0).
  if (offset < w) return {offset, 0.0};
  offset -= w;
  if (offset < h) return {w, offset};
  offset -= h;
  if (offset < w) return {w - offset, h};
  offset -= w;
  return {0.0, h - offset};
}

}  // namespace detail

inline AnchorSet select_anchors(const Graph& g, const Deployment& d, std::size_t k,
                                AnchorStrategy strategy) {
  const std::size_t n = g.size();
  if (k < 1 || k > n)
    throw std::invalid_argument("select_anchors: k must be in [1, n]");

  AnchorSet set;
  set.anchors.reserve(k);
  std::vector<bool> chosen(n, false);

  switch (strategy) {
    case AnchorStrategy::kCorners: {
      const Point corners[4] = {{0.0, 0.0},
                                {d.field_width, 0.0},
                                {d.field_width, d.field_height},
                                {0.0, d.field_height}};
      for (std::size_t i = 0; i < k; ++i) {
        const NodeId pick = detail::nearest_unchosen(d, corners[i % 4], chosen);
        chosen[pick] = true;
        set.anchors.push_back(pick);
      }
      break;
    }
    case AnchorStrategy::kRandom: {
      SeededRng rng(splitmix64(d.seed ^ detail::kAnchorSeedTag));
      std::vector<NodeId> ids(n);
      for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
      // Partial Fisher-Yates: the first k slots are a uniform distinct sample.
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
        std::swap(ids[i], ids[j]);
        set.anchors.push_back(ids[i]);
      }
      break;
    }
    case AnchorStrategy::kPerimeter: {
      const double perimeter = 2.0 * (d.field_width + d.field_height);
      for (std::size_t i = 0; i < k; ++i) {
        const Point target = detail::boundary_point(
            d.field_width, d.field_height,
            perimeter * static_cast<double>(i) / static_cast<double>(k));
        const NodeId pick = detail::nearest_unchosen(d, target, chosen);
        chosen[pick] = true;
        set.anchors.push_back(pick);
      }
      break;
    }
  }
  return set;
}

// One ideal BFS flood per anchor; entry [v][i] is the hop count from
// anchors[i] to v. Floods are independent, so the result is order-free.
inline VcTable assign_coordinates(const Graph& g, const AnchorSet& a) {
  if (a.anchors.empty()) throw std::invalid_argument("assign_coordinates: empty anchor set");
  for (NodeId anchor : a.anchors)
    if (anchor >= g.size())
      throw std::invalid_argument("assign_coordinates: anchor id out of range");

  VcTable table(a, g.size());
  for (std::size_t i = 0; i < a.anchors.size(); ++i) {
    const auto dist = hop_distances(g, a.anchors[i]);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (dist[v] < 0)
        throw std::runtime_error("assign_coordinates: node " + std::to_string(v) +
                                 " has no path to anchor " + std::to_string(a.anchors[i]));
      table.vc_mutable(static_cast<NodeId>(v))[i] = dist[v];
    }
  }
  return table;
}

// Groups nodes that share an identical coordinate vector. Only multi-member
// groups are zones. Ordered by member count descending, then by coordinate.
inline std::vector<VcZone> find_vc_zones(const Graph& g, const VcTable& t) {
  std::map<std::vector<int>, std::vector<NodeId>> groups;
  for (std::size_t v = 0; v < t.node_count(); ++v) {
    const auto c = t.vc(static_cast<NodeId>(v));
    groups[std::vector<int>(c.begin(), c.end())].push_back(static_cast<NodeId>(v));
  }

  std::vector<VcZone> zones;
  for (auto& [coord, members] : groups) {
    if (members.size() < 2) continue;
    VcZone z;
    z.coordinate = coord;
    z.members = members;  // already sorted: ids were appended in ascending order

    // Span: max pairwise hop distance, measured in the full graph.
    z.span_hops = 0;
    for (NodeId m : z.members) {
      const auto dist = hop_distances(g, m);
      for (NodeId other : z.members) z.span_hops = std::max(z.span_hops, dist[other]);
    }

    // Connectivity of the induced subgraph, by BFS restricted to members.
    std::vector<bool> in_zone(g.size(), false);
    for (NodeId m : z.members) in_zone[m] = true;
    std::vector<bool> seen(g.size(), false);
    std::vector<NodeId> stack{z.members.front()};
    seen[z.members.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (in_zone[v] && !seen[v]) {
          seen[v] = true;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    z.connected = (reached == z.members.size());
    zones.push_back(std::move(z));
  }

  std::sort(zones.begin(), zones.end(), [](const VcZone& a, const VcZone& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.coordinate < b.coordinate;
  });
  return zones;
}

// Plain-text form: one `id c1 c2 ... cK` line per node.
inline void save_vc_table(std::ostream& os, const VcTable& t) {
  std::string out;
  for (std::size_t v = 0; v < t.node_count(); ++v) {
    out += std::to_string(v);
    for (int c : t.vc(static_cast<NodeId>(v))) {
      out += ' ';
      out += std::to_string(c);
    }
    out += '\n';
  }
  os << out;
}

}  // namespace vcgr

#endif  // VCGR_VCS_HPP_
