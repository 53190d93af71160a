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

// Hand-built deployments with exhaustively verified structure. Each builder
// documents its adjacency so tests can assert against it without recomputing.

#ifndef VCGR_TESTS_SUPPORT_FIXTURES_HPP_
#define VCGR_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "vcgr/topology.hpp"
#include "vcgr/vcs.hpp"

namespace vcgr::fixtures {

struct Fixture {
  Deployment dep;
  Graph graph;
};

inline Deployment make_deployment(double w, double h, double range,
                                  std::initializer_list<Point> positions) {
  Deployment d;
  d.field_width = w;
  d.field_height = h;
  d.radio_range = range;
  d.seed = 0;
  NodeId id = 0;
  for (Point p : positions) d.nodes.push_back(NodeRecord{id++, p, p});
  return d;
}

// Builds a coordinate table row by row, bypassing BFS assignment. Used to pin
// protocol mechanics to exact coordinate patterns.
inline VcTable make_vc_table(std::vector<NodeId> anchors,
                             std::initializer_list<std::initializer_list<int>> rows) {
  VcTable t(AnchorSet{std::move(anchors)}, rows.size());
  NodeId v = 0;
  for (const auto& row : rows) {
    auto out = t.vc_mutable(v++);
    std::size_t i = 0;
    for (int c : row) out[i++] = c;
  }
  return t;
}

// Five nodes on the x-axis at unit spacing; the graph is the path 0-1-2-3-4.
inline Fixture line5() {
  Fixture f;
  f.dep = make_deployment(4, 1, 1.0,
                          {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  f.graph = build_graph(f.dep);
  return f;
}

// A U-shaped corridor around a radio void. The graph is the 8-node path
// S-L1-L2-L3-L4-L5-L6-D; S's only neighbor is farther from D than S itself,
// so geographic greedy stalls immediately while a 7-hop route exists.
inline constexpr NodeId kUvoidS = 0;
inline constexpr NodeId kUvoidL1 = 1;
inline constexpr NodeId kUvoidL2 = 2;
inline constexpr NodeId kUvoidL3 = 3;
inline constexpr NodeId kUvoidL4 = 4;
inline constexpr NodeId kUvoidL5 = 5;
inline constexpr NodeId kUvoidL6 = 6;
inline constexpr NodeId kUvoidD = 7;

inline Fixture uvoid() {
  Fixture f;
  f.dep = make_deployment(2, 3, 1.0,
                          {{2, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  f.graph = build_graph(f.dep);
  return f;
}

// Two parallel three-node arms joined only through the end nodes 0 and 1; the
// graph is an 8-cycle. With anchors {0, 1} the arms mirror each other, so the
// three interior columns pair up into equal-coordinate zones.
inline constexpr NodeId kArmsA1 = 0;
inline constexpr NodeId kArmsA2 = 1;
inline constexpr NodeId kArmsT1 = 2;
inline constexpr NodeId kArmsT2 = 3;
inline constexpr NodeId kArmsT3 = 4;
inline constexpr NodeId kArmsB1 = 5;
inline constexpr NodeId kArmsB2 = 6;
inline constexpr NodeId kArmsB3 = 7;

inline Fixture twoarms() {
  Fixture f;
  f.dep = make_deployment(4, 2, 1.5,
                          {{0, 1}, {4, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 0}, {2, 0}, {3, 0}});
  f.graph = build_graph(f.dep);
  return f;
}

// A chain 0-1-4-5 with a dead two-node spur 2-3 hanging off node 1. With
// anchors {0, 3} the spur head ties the chain under the semi-Manhattan
// measure and its lower id wins, luring a depth-first router into the spur.
inline constexpr NodeId kBranchA = 0;
inline constexpr NodeId kBranchB = 1;
inline constexpr NodeId kBranchS1 = 2;
inline constexpr NodeId kBranchS2 = 3;
inline constexpr NodeId kBranchC = 4;
inline constexpr NodeId kBranchD = 5;

inline Fixture vcbranch() {
  Fixture f;
  f.dep = make_deployment(3, 2, 1.0,
                          {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {3, 0}});
  f.graph = build_graph(f.dep);
  return f;
}

// Triangle 0-1-2 with the anchor at node 0: nodes 1 and 2 share coordinate
// (1) while being adjacent, giving a one-hop (unexpanded, connected) zone.
inline Fixture triangle() {
  Fixture f;
  f.dep = make_deployment(1, 1, 1.0, {{0, 0}, {1, 0}, {0.5, 0.5}});
  f.graph = build_graph(f.dep);
  return f;
}

// Star around node 0 with destination 4 hanging off leaf 1 (tree edges
// 0-1, 0-2, 0-3, 1-4). Paired with star_tie_vc() below, the pair (0, 4) is
// the fixture's single equal-distance stall under the Euclidean VC measure.
inline Fixture star_tie() {
  Fixture f;
  f.dep = make_deployment(3, 2, 1.0, {{1, 1}, {2, 1}, {0, 1}, {1, 2}, {3, 1}});
  f.graph = build_graph(f.dep);
  return f;
}

inline VcTable star_tie_vc() {
  return make_vc_table({0, 1}, {{1, 2}, {2, 1}, {3, 4}, {1, 5}, {0, 0}});
}

// Chain 0-1-2-3 whose coordinates make the semi-Manhattan distance to node 3
// stall right at the source, forcing delivery entirely via anchor descent on
// dimension 0 (coordinates 3 > 2 > 1 > 0 along the chain).
inline Fixture bvr_chain() {
  Fixture f;
  f.dep = make_deployment(3, 1, 1.0, {{3, 0}, {2, 0}, {1, 0}, {0, 0}});
  f.graph = build_graph(f.dep);
  return f;
}

inline VcTable bvr_chain_vc() {
  return make_vc_table({3, 9}, {{3, 2}, {2, 3}, {1, 1}, {0, 0}});
}

// The corridor of uvoid() with a hand-made table: at S the first dimension's
// gap cannot be closed (|3-5| equals |7-5|) but L1's smaller coordinate
// offers a descent hop, after which gap-greedy takes over.
inline VcTable uvoid_backtrack_vc() {
  return make_vc_table({2, 7}, {{7, 1}, {3, 1}, {4, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 0}});
}

// Path 0-1-2-3-4: coordinates place a single forced detour at the source
// (node 1 is no closer to node 4 than node 0 is), after which the remaining
// hops are strictly improving.
inline Fixture vcap_detour() {
  Fixture f;
  f.dep = make_deployment(4, 1, 1.0, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  f.graph = build_graph(f.dep);
  return f;
}

inline VcTable vcap_detour_vc() {
  return make_vc_table({5, 9}, {{2, 2}, {3, 3}, {4, 2}, {4, 1}, {4, 0}});
}

// Chain 0-1-2-3 on a coordinate plateau (every node is equally far from the
// unreachable destination 4), so each hop is a forced detour until the
// budget runs out. Node 4 sits beyond radio range of everything.
inline Fixture vcap_plateau() {
  Fixture f;
  f.dep = make_deployment(10, 1, 1.0, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {10, 0}});
  f.graph = build_graph(f.dep);
  return f;
}

inline VcTable vcap_plateau_vc() {
  return make_vc_table({5, 9}, {{2, 2}, {6, 2}, {2, 2}, {6, 2}, {4, 0}});
}

// Four-cycle 0-1-3-2-0: two equal-length routes between opposite corners,
// exercising lowest-id tie-breaking in shortest-path reconstruction.
inline Fixture diamond() {
  Fixture f;
  f.dep = make_deployment(1, 1, 1.0, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  f.graph = build_graph(f.dep);
  return f;
}

}  // namespace vcgr::fixtures

#endif  // VCGR_TESTS_SUPPORT_FIXTURES_HPP_
