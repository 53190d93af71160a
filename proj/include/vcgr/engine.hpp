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

#ifndef VCGR_ENGINE_HPP_
#define VCGR_ENGINE_HPP_

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vcgr/protocols.hpp"
#include "vcgr/topology.hpp"

namespace vcgr {

struct RouteOutcome {
  bool delivered = false;
  int hops = 0;  // length of the recorded route, |path| - 1
  std::vector<NodeId> path;
  std::optional<DropReason> drop_reason;
  // (path index the packet was at, mode adopted there); first entry is the
  // protocol's starting mode at index 0.
  std::vector<std::pair<int, Mode>> mode_transitions;
  int optimal_hops = -1;  // BFS oracle; -1 when the pair is unreachable
  int total_forwards = 0;  // every forward spent, including ones lcr rewound away
  std::array<int, kModeCount> mode_forwards{};  // forwards taken per mode

  double stretch() const {
    return delivered && optimal_hops >= 1 ? static_cast<double>(hops) / optimal_hops : 0.0;
  }
};

namespace detail {

inline RouteOutcome route_packet_impl(const RouteViews& v, ProtocolKind p, NodeId src, NodeId dst,
                                      int ttl, const int* dist_from_dst) {
  const Graph& g = *v.graph;
  if (src >= g.size() || dst >= g.size())
    throw std::invalid_argument("route_packet: node id out of range");
  if (ttl < 1) throw std::invalid_argument("route_packet: ttl must be >= 1");

  RouteOutcome out;
  out.optimal_hops =
      dist_from_dst ? dist_from_dst[src] : shortest_hops(g, src, dst).value_or(-1);

  if (p == ProtocolKind::kSp) {
    out.path = sp_route(g, src, dst);  // throws when unreachable
    out.hops = static_cast<int>(out.path.size()) - 1;
    out.total_forwards = out.hops;
    out.delivered = true;
    return out;
  }

  Packet pkt = make_packet(v, p, src, dst, ttl);
  out.mode_transitions.emplace_back(0, pkt.mode);
  Mode last_mode = pkt.mode;
  int forwards = 0;
  for (;;) {
    const StepAction action = protocol_step(pkt, v, p);
    if (pkt.mode != last_mode) {
      out.mode_transitions.emplace_back(static_cast<int>(pkt.path.size()) - 1, pkt.mode);
      last_mode = pkt.mode;
    }
    if (action.kind == StepAction::Kind::kDeliver) {
      out.delivered = true;
      break;
    }
    if (action.kind == StepAction::Kind::kDrop) {
      out.drop_reason = action.reason;
      break;
    }
    if (forwards == ttl) {
      out.drop_reason = DropReason::kTtlExpired;
      break;
    }
    if (!g.has_edge(pkt.path.back(), action.next))
      throw std::logic_error("route_packet: protocol forwarded to a non-neighbor");
    pkt.path.push_back(action.next);
    pkt.visited[action.next] = 1;
    ++forwards;
    ++out.mode_forwards[static_cast<int>(pkt.mode)];
  }
  out.total_forwards = forwards;
  out.hops = static_cast<int>(pkt.path.size()) - 1;
  out.path = std::move(pkt.path);
  if (out.delivered && out.path.back() != dst)
    throw std::logic_error("route_packet: delivered away from the destination");
  return out;
}

}  // namespace detail

// Drives one packet from src until the protocol delivers it, drops it, or the
// ttl (a forward budget) runs out.
inline RouteOutcome route_packet(const RouteViews& v, ProtocolKind p, NodeId src, NodeId dst,
                                 int ttl) {
  return detail::route_packet_impl(v, p, src, dst, ttl, nullptr);
}

// Outcomes in pair order. Shares one BFS row per distinct destination so the
// optimality oracle does not dominate the run time.
inline std::vector<RouteOutcome> run_pairset(const RouteViews& v, ProtocolKind p,
                                             std::span<const std::pair<NodeId, NodeId>> pairs,
                                             int ttl) {
  std::unordered_map<NodeId, std::vector<int>> oracle;
  std::vector<RouteOutcome> outcomes;
  outcomes.reserve(pairs.size());
  for (const auto& [src, dst] : pairs) {
    auto it = oracle.find(dst);
    if (it == oracle.end()) it = oracle.emplace(dst, hop_distances(*v.graph, dst)).first;
    outcomes.push_back(detail::route_packet_impl(v, p, src, dst, ttl, it->second.data()));
  }
  return outcomes;
}

}  // namespace vcgr

#endif  // VCGR_ENGINE_HPP_
