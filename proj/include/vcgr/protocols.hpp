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

#ifndef VCGR_PROTOCOLS_HPP_
#define VCGR_PROTOCOLS_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcgr/geometry.hpp"
#include "vcgr/metrics.hpp"
#include "vcgr/topology.hpp"
#include "vcgr/vcs.hpp"

namespace vcgr {

enum class Mode {
  kGreedyGeo,
  kFace,
  kVcGreedy,
  kVcBacktrack,
  kRecordedBacktrack,
  kAnchorFallback,
};
inline constexpr int kModeCount = 6;

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kGreedyGeo: return "greedy_geo";
    case Mode::kFace: return "face";
    case Mode::kVcGreedy: return "vc_greedy";
    case Mode::kVcBacktrack: return "vc_backtrack";
    case Mode::kRecordedBacktrack: return "recorded_backtrack";
    case Mode::kAnchorFallback: return "anchor_fallback";
  }
  return "?";
}

enum class DropReason { kTtlExpired, kNoProgress, kLoopDetected, kUnreachableState };

inline const char* drop_reason_name(DropReason r) {
  switch (r) {
    case DropReason::kTtlExpired: return "ttl_expired";
    case DropReason::kNoProgress: return "no_progress";
    case DropReason::kLoopDetected: return "loop_detected";
    case DropReason::kUnreachableState: return "unreachable_state";
  }
  return "?";
}

enum class ProtocolKind { kSp, kGf, kGpsr, kVcap, kLcr, kBvr, kHgr };

inline ProtocolKind parse_protocol(const std::string& s) {
  if (s == "sp") return ProtocolKind::kSp;
  if (s == "gf") return ProtocolKind::kGf;
  if (s == "gpsr") return ProtocolKind::kGpsr;
  if (s == "vcap") return ProtocolKind::kVcap;
  if (s == "lcr") return ProtocolKind::kLcr;
  if (s == "bvr") return ProtocolKind::kBvr;
  if (s == "hgr") return ProtocolKind::kHgr;
  throw std::invalid_argument("unknown protocol '" + s + "'");
}

inline const char* protocol_name(ProtocolKind p) {
  switch (p) {
    case ProtocolKind::kSp: return "sp";
    case ProtocolKind::kGf: return "gf";
    case ProtocolKind::kGpsr: return "gpsr";
    case ProtocolKind::kVcap: return "vcap";
    case ProtocolKind::kLcr: return "lcr";
    case ProtocolKind::kBvr: return "bvr";
    case ProtocolKind::kHgr: return "hgr";
  }
  return "?";
}

// One routing decision: move the packet, deliver it, or give up.
struct StepAction {
  enum class Kind { kForward, kDeliver, kDrop };
  Kind kind = Kind::kDrop;
  NodeId next = kNoNode;
  DropReason reason = DropReason::kNoProgress;

  static StepAction forward(NodeId next) { return {Kind::kForward, next, DropReason::kNoProgress}; }
  static StepAction deliver() { return {Kind::kDeliver, kNoNode, DropReason::kNoProgress}; }
  static StepAction drop(DropReason r) { return {Kind::kDrop, kNoNode, r}; }
};

// Per-node Gabriel subgraph over perceived positions. Each node prunes its own
// adjacency using only its neighbors' positions, so under localization error
// the two endpoints of an edge may disagree; with exact positions the result
// is the classic symmetric Gabriel graph.
class PlanarGraph {
 public:
  PlanarGraph() = default;
  explicit PlanarGraph(std::vector<std::vector<NodeId>> adjacency)
      : adj_(std::move(adjacency)) {}

  std::size_t size() const { return adj_.size(); }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_[v].data(), adj_[v].size()};
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
};

// Keep edge (u,v) iff no neighbor w of u lies strictly inside the disk with
// diameter uv. Witnesses on the circle do not remove the edge.
inline PlanarGraph planarize_gabriel(const Graph& g, std::span<const Point> positions) {
  if (positions.size() < g.size())
    throw std::invalid_argument("planarize_gabriel: positions shorter than graph");
  std::vector<std::vector<NodeId>> kept(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto nbrs = g.neighbors(static_cast<NodeId>(u));
    for (NodeId v : nbrs) {
      const Point mid = midpoint(positions[u], positions[v]);
      const double radius_sq = distance_sq(positions[u], positions[v]) / 4.0;
      bool witnessed = false;
      for (NodeId w : nbrs) {
        if (w == v) continue;
        if (distance_sq(positions[w], mid) < radius_sq) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) kept[u].push_back(v);
    }
  }
  return PlanarGraph(std::move(kept));
}

// Face-traversal bookkeeping for one episode of perimeter routing.
struct FaceState {
  Point void_pos;                // where greedy failed; origin of the exit line
  double best_cross = 0.0;       // closest crossing of the exit line seen so far
  NodeId first_from = kNoNode;   // first traversed edge; re-traversal means a loop
  NodeId first_to = kNoNode;
};

struct Packet {
  NodeId dest_id = kNoNode;
  Dest dest;                        // perceived position and VC vector of the target
  Mode mode = Mode::kGreedyGeo;
  double void_distance = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> dim_order;  // hgr: dimensions by descending gap at the void
  std::size_t dim_cursor = 0;
  std::size_t fallback_dim = 0;        // bvr: anchor dimension being descended
  int detours_used = 0;                // vcap: consecutive forced forwards
  std::vector<char> visited;           // every node the packet was ever held by
  std::vector<NodeId> path;            // recorded route; lcr rewinds it on dead ends
  int ttl = 0;
  FaceState face;
};

struct RouteViews {
  const Graph* graph = nullptr;
  const PlanarGraph* planar = nullptr;  // required by gpsr only
  MetricViews views;                    // perceived positions, optional VC table
  MetricKind vc_metric = MetricKind::kVcEuclidean;  // vcap/lcr greedy measure
  int vcap_detour_budget = 3;
};

namespace detail {

inline void require_vc(const RouteViews& v, const char* proto) {
  if (v.views.vc == nullptr)
    throw std::invalid_argument(std::string(proto) + ": VC table required but missing");
}

inline bool vc_equal(std::span<const int> a, std::span<const int> b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace detail

inline Packet make_packet(const RouteViews& v, ProtocolKind p, NodeId src, NodeId dst, int ttl) {
  Packet pkt;
  pkt.dest_id = dst;
  pkt.dest = make_dest(v.views, dst);
  pkt.ttl = ttl;
  pkt.visited.assign(v.graph->size(), 0);
  pkt.visited[src] = 1;
  pkt.path.push_back(src);
  switch (p) {
    case ProtocolKind::kVcap:
    case ProtocolKind::kLcr:
    case ProtocolKind::kBvr:
      pkt.mode = Mode::kVcGreedy;
      break;
    default:
      pkt.mode = Mode::kGreedyGeo;
      break;
  }
  return pkt;
}

// One BFS shortest path; among equal-length options the lowest next-hop id
// wins at every step.
inline std::vector<NodeId> sp_route(const Graph& g, NodeId src, NodeId dst) {
  if (src >= g.size() || dst >= g.size())
    throw std::invalid_argument("sp_route: node id out of range");
  if (src == dst) return {src};
  const auto dist = hop_distances(g, dst);
  if (dist[src] < 0)
    throw std::runtime_error("sp_route: no path from " + std::to_string(src) + " to " +
                             std::to_string(dst));
  std::vector<NodeId> path{src};
  NodeId cur = src;
  while (cur != dst) {
    for (NodeId nb : g.neighbors(cur)) {
      if (dist[nb] == dist[cur] - 1) {
        cur = nb;  // neighbor lists are id-sorted, so the first hit is lowest
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

inline StepAction gf_step(Packet& pkt, NodeId cur, const RouteViews& v) {
  if (cur == pkt.dest_id) return StepAction::deliver();
  const auto pos = v.views.positions;
  const double here = distance_sq(pos[cur], pkt.dest.pos);
  NodeId best = kNoNode;
  double best_d = here;
  for (NodeId nb : v.graph->neighbors(cur)) {
    const double d = distance_sq(pos[nb], pkt.dest.pos);
    if (d < best_d) {
      best_d = d;
      best = nb;
    }
  }
  if (best == kNoNode) return StepAction::drop(DropReason::kNoProgress);
  return StepAction::forward(best);
}

namespace detail {

// Right-hand-rule sweep: neighbors ordered counterclockwise from the reference
// ray. The first hop of an episode sweeps from the line toward the
// destination (angle 0 allowed); later hops sweep from the arrival edge, which
// itself is taken only as a last resort.
inline StepAction face_sweep(Packet& pkt, NodeId cur, const RouteViews& v, double ref_angle,
                             bool first_hop, NodeId prev) {
  const auto pos = v.views.positions;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  struct Cand {
    double delta;
    NodeId id;
  };
  std::vector<Cand> cands;
  for (NodeId nb : v.planar->neighbors(cur)) {
    double delta = ccw_delta(ref_angle, bearing(pos[cur], pos[nb]));
    if (!first_hop && (nb == prev || delta == 0.0)) delta = kTwoPi;
    cands.push_back({delta, nb});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.delta != b.delta ? a.delta < b.delta : a.id < b.id;
  });
  for (const Cand& c : cands) {
    // Face change: the edge crosses the void-to-destination line strictly
    // closer than any earlier crossing. Skip it and sweep on within the new
    // face, forgetting the old first-edge marker.
    if (auto x = proper_intersection(pos[cur], pos[c.id], pkt.face.void_pos, pkt.dest.pos)) {
      const double dx = distance(*x, pkt.dest.pos);
      if (dx < pkt.face.best_cross) {
        pkt.face.best_cross = dx;
        pkt.face.first_from = kNoNode;
        pkt.face.first_to = kNoNode;
        continue;
      }
    }
    if (pkt.face.first_from == cur && pkt.face.first_to == c.id)
      return StepAction::drop(DropReason::kLoopDetected);
    if (pkt.face.first_from == kNoNode) {
      pkt.face.first_from = cur;
      pkt.face.first_to = c.id;
    }
    return StepAction::forward(c.id);
  }
  return StepAction::drop(DropReason::kNoProgress);
}

}  // namespace detail

inline StepAction gpsr_step(Packet& pkt, NodeId cur, const RouteViews& v) {
  if (v.planar == nullptr)
    throw std::invalid_argument("gpsr: planar view required but missing");
  if (cur == pkt.dest_id) return StepAction::deliver();
  const auto pos = v.views.positions;
  if (pkt.mode == Mode::kFace && distance(pos[cur], pkt.dest.pos) < pkt.void_distance)
    pkt.mode = Mode::kGreedyGeo;

  if (pkt.mode == Mode::kGreedyGeo) {
    const double here = distance_sq(pos[cur], pkt.dest.pos);
    NodeId best = kNoNode;
    double best_d = here;
    for (NodeId nb : v.graph->neighbors(cur)) {
      const double d = distance_sq(pos[nb], pkt.dest.pos);
      if (d < best_d) {
        best_d = d;
        best = nb;
      }
    }
    if (best != kNoNode) return StepAction::forward(best);
    // Void: start a face episode around it.
    pkt.mode = Mode::kFace;
    pkt.void_distance = distance(pos[cur], pkt.dest.pos);
    pkt.face = FaceState{pos[cur], pkt.void_distance, kNoNode, kNoNode};
    return detail::face_sweep(pkt, cur, v, bearing(pos[cur], pkt.dest.pos), true, kNoNode);
  }

  const NodeId prev = pkt.path[pkt.path.size() - 2];
  return detail::face_sweep(pkt, cur, v, bearing(pos[cur], pos[prev]), false, prev);
}

inline StepAction vcap_step(Packet& pkt, NodeId cur, const RouteViews& v) {
  detail::require_vc(v, "vcap");
  if (cur == pkt.dest_id) return StepAction::deliver();
  const VcTable& t = *v.views.vc;
  // Zone ambiguity: the coordinates say "arrived" but the node is an impostor.
  if (detail::vc_equal(t.vc(cur), pkt.dest.vc))
    return StepAction::drop(DropReason::kUnreachableState);

  const auto here = detail::dist_key(v.vc_metric, v.views, cur, pkt.dest);
  NodeId best = kNoNode;
  auto best_k = here;
  for (NodeId nb : v.graph->neighbors(cur)) {
    const auto k = detail::dist_key(v.vc_metric, v.views, nb, pkt.dest);
    if (k < best_k) {
      best_k = k;
      best = nb;
    }
  }
  if (best != kNoNode) {
    pkt.detours_used = 0;
    return StepAction::forward(best);
  }
  // Local detour: a bounded run of forced forwards through fresh nodes.
  if (pkt.detours_used >= v.vcap_detour_budget)
    return StepAction::drop(DropReason::kNoProgress);
  NodeId fallback = kNoNode;
  detail::DistKey fallback_k;
  for (NodeId nb : v.graph->neighbors(cur)) {
    if (pkt.visited[nb]) continue;
    const auto k = detail::dist_key(v.vc_metric, v.views, nb, pkt.dest);
    if (fallback == kNoNode || k < fallback_k) {
      fallback_k = k;
      fallback = nb;
    }
  }
  if (fallback == kNoNode) return StepAction::drop(DropReason::kNoProgress);
  ++pkt.detours_used;
  return StepAction::forward(fallback);
}

// Depth-first search ordered by (distance, id). The recorded route is the DFS
// stack: dead ends rewind it without spending forwards, and the next forward
// leaves from the rewound top.
inline StepAction lcr_step(Packet& pkt, const RouteViews& v) {
  detail::require_vc(v, "lcr");
  if (pkt.path.back() == pkt.dest_id) return StepAction::deliver();
  bool rewound = false;
  for (;;) {
    const NodeId cur = pkt.path.back();
    NodeId best = kNoNode;
    detail::DistKey best_k;
    for (NodeId nb : v.graph->neighbors(cur)) {
      if (pkt.visited[nb]) continue;
      const auto k = detail::dist_key(v.vc_metric, v.views, nb, pkt.dest);
      if (best == kNoNode || k < best_k) {
        best_k = k;
        best = nb;
      }
    }
    if (best != kNoNode) {
      pkt.mode = rewound ? Mode::kRecordedBacktrack : Mode::kVcGreedy;
      return StepAction::forward(best);
    }
    if (pkt.path.size() == 1) return StepAction::drop(DropReason::kNoProgress);
    pkt.path.pop_back();
    rewound = true;
  }
}

inline StepAction bvr_step(Packet& pkt, NodeId cur, const RouteViews& v) {
  detail::require_vc(v, "bvr");
  if (cur == pkt.dest_id) return StepAction::deliver();
  const VcTable& t = *v.views.vc;

  if (pkt.mode == Mode::kVcGreedy) {
    const auto here = detail::dist_key(MetricKind::kVcSemiManhattan, v.views, cur, pkt.dest);
    NodeId best = kNoNode;
    auto best_k = here;
    for (NodeId nb : v.graph->neighbors(cur)) {
      const auto k = detail::dist_key(MetricKind::kVcSemiManhattan, v.views, nb, pkt.dest);
      if (k < best_k) {
        best_k = k;
        best = nb;
      }
    }
    if (best != kNoNode) return StepAction::forward(best);
    // Stall: head for the anchor the destination reports as nearest.
    pkt.mode = Mode::kAnchorFallback;
    pkt.fallback_dim = 0;
    for (std::size_t i = 1; i < pkt.dest.vc.size(); ++i)
      if (pkt.dest.vc[i] < pkt.dest.vc[pkt.fallback_dim]) pkt.fallback_dim = i;
  }

  // Descend the chosen anchor coordinate; at the anchor itself, give up.
  const std::size_t dim = pkt.fallback_dim;
  const int own = t.vc(cur)[dim];
  if (own == 0) return StepAction::drop(DropReason::kNoProgress);
  NodeId best = kNoNode;
  int best_c = own;
  for (NodeId nb : v.graph->neighbors(cur)) {
    const int c = t.vc(nb)[dim];
    if (c < best_c) {
      best_c = c;
      best = nb;
    }
  }
  if (best == kNoNode) return StepAction::drop(DropReason::kNoProgress);
  return StepAction::forward(best);
}

inline StepAction hgr_step(Packet& pkt, NodeId cur, const RouteViews& v) {
  detail::require_vc(v, "hgr");
  if (cur == pkt.dest_id) return StepAction::deliver();
  const auto pos = v.views.positions;
  const VcTable& t = *v.views.vc;

  // The VC detour ends as soon as the packet undercuts the void distance.
  if ((pkt.mode == Mode::kVcGreedy || pkt.mode == Mode::kVcBacktrack ||
       pkt.mode == Mode::kRecordedBacktrack) &&
      distance(pos[cur], pkt.dest.pos) < pkt.void_distance)
    pkt.mode = Mode::kGreedyGeo;

  if (pkt.mode == Mode::kGreedyGeo) {
    const double here = distance_sq(pos[cur], pkt.dest.pos);
    NodeId best = kNoNode;
    double best_d = here;
    for (NodeId nb : v.graph->neighbors(cur)) {
      if (pkt.visited[nb]) continue;
      const double d = distance_sq(pos[nb], pkt.dest.pos);
      if (d < best_d) {
        best_d = d;
        best = nb;
      }
    }
    if (best != kNoNode) return StepAction::forward(best);
    // Void: order the dimensions by how far this node is from the
    // destination's count, largest gap first, and work them in turn.
    pkt.mode = Mode::kVcGreedy;
    pkt.void_distance = distance(pos[cur], pkt.dest.pos);
    const std::size_t k = pkt.dest.vc.size();
    pkt.dim_order.resize(k);
    for (std::size_t i = 0; i < k; ++i) pkt.dim_order[i] = i;
    const auto cur_vc = t.vc(cur);
    std::sort(pkt.dim_order.begin(), pkt.dim_order.end(), [&](std::size_t a, std::size_t b) {
      const int ga = std::abs(cur_vc[a] - pkt.dest.vc[a]);
      const int gb = std::abs(cur_vc[b] - pkt.dest.vc[b]);
      return ga != gb ? ga > gb : a < b;
    });
    pkt.dim_cursor = 0;
  }

  const auto cur_vc = t.vc(cur);
  while (pkt.dim_cursor < pkt.dim_order.size()) {
    const std::size_t dim = pkt.dim_order[pkt.dim_cursor];
    const int goal = pkt.dest.vc[dim];
    const int here_gap = std::abs(cur_vc[dim] - goal);
    // Dimension-greedy: close the gap on this coordinate.
    NodeId best = kNoNode;
    int best_gap = here_gap;
    for (NodeId nb : v.graph->neighbors(cur)) {
      if (pkt.visited[nb]) continue;
      const int gap = std::abs(t.vc(nb)[dim] - goal);
      if (gap < best_gap) {
        best_gap = gap;
        best = nb;
      }
    }
    if (best != kNoNode) {
      pkt.mode = Mode::kVcGreedy;
      return StepAction::forward(best);
    }
    // Stuck: one hop backwards towards this dimension's anchor, then retry
    // the gap-greedy rule from the new node.
    NodeId back = kNoNode;
    int back_c = cur_vc[dim];
    for (NodeId nb : v.graph->neighbors(cur)) {
      if (pkt.visited[nb]) continue;
      const int c = t.vc(nb)[dim];
      if (c < back_c) {
        back_c = c;
        back = nb;
      }
    }
    if (back != kNoNode) {
      pkt.mode = Mode::kVcBacktrack;
      return StepAction::forward(back);
    }
    ++pkt.dim_cursor;
    pkt.mode = Mode::kVcGreedy;
  }

  // Every dimension is spent: finish the detour with the same convergent
  // recorded-route search lcr uses, measured on VC distance. Rewinds are
  // free, and only fresh nodes are ever forwarded to, so the walk still
  // visits each node at most once and cannot outlive the network.
  bool rewound = false;
  for (;;) {
    const NodeId node = pkt.path.back();
    NodeId best = kNoNode;
    detail::DistKey best_k;
    for (NodeId nb : v.graph->neighbors(node)) {
      if (pkt.visited[nb]) continue;
      const auto k = detail::dist_key(MetricKind::kVcEuclidean, v.views, nb, pkt.dest);
      if (best == kNoNode || k < best_k) {
        best_k = k;
        best = nb;
      }
    }
    if (best != kNoNode) {
      pkt.mode = rewound ? Mode::kRecordedBacktrack : Mode::kVcGreedy;
      return StepAction::forward(best);
    }
    if (pkt.path.size() == 1) return StepAction::drop(DropReason::kNoProgress);
    pkt.path.pop_back();
    rewound = true;
  }
}

// Dispatch for the per-hop protocols; sp routes whole paths and is handled by
// the engine directly.
inline StepAction protocol_step(Packet& pkt, const RouteViews& v, ProtocolKind p) {
  const NodeId cur = pkt.path.back();
  switch (p) {
    case ProtocolKind::kGf: return gf_step(pkt, cur, v);
    case ProtocolKind::kGpsr: return gpsr_step(pkt, cur, v);
    case ProtocolKind::kVcap: return vcap_step(pkt, cur, v);
    case ProtocolKind::kLcr: return lcr_step(pkt, v);
    case ProtocolKind::kBvr: return bvr_step(pkt, cur, v);
    case ProtocolKind::kHgr: return hgr_step(pkt, cur, v);
    case ProtocolKind::kSp: break;
  }
  throw std::logic_error("protocol_step: sp has no step function");
}

}  // namespace vcgr

#endif  // VCGR_PROTOCOLS_HPP_
