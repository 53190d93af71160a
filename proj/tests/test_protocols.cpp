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

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <utility>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "vcgr/engine.hpp"
#include "vcgr/protocols.hpp"
#include "vcgr/topology.hpp"
#include "vcgr/vcs.hpp"

using namespace vcgr;
namespace fx = vcgr::fixtures;

namespace {

// Keeps the position vector and table alive alongside the views into them.
struct Scenario {
  Deployment dep;
  Graph graph;
  std::vector<Point> pos;
  VcTable vc;
  PlanarGraph planar;
  RouteViews views;

  Scenario(fx::Fixture f, VcTable table, MetricKind metric = MetricKind::kVcEuclidean)
      : dep(std::move(f.dep)), graph(std::move(f.graph)), pos(dep.perceived_positions()),
        vc(std::move(table)), planar(planarize_gabriel(graph, pos)) {
    views.graph = &graph;
    views.planar = &planar;
    views.views = MetricViews{{pos.data(), pos.size()}, vc.dimensions() > 0 ? &vc : nullptr};
    views.vc_metric = metric;
  }
};

using Transitions = std::vector<std::pair<int, Mode>>;

}  // namespace

TEST_CASE("protocol and outcome names round-trip", "[protocols]") {
  for (auto p : {ProtocolKind::kSp, ProtocolKind::kGf, ProtocolKind::kGpsr, ProtocolKind::kVcap,
                 ProtocolKind::kLcr, ProtocolKind::kBvr, ProtocolKind::kHgr})
    CHECK(parse_protocol(protocol_name(p)) == p);
  CHECK_THROWS_AS(parse_protocol("hgx"), std::invalid_argument);
  CHECK(std::string(drop_reason_name(DropReason::kUnreachableState)) == "unreachable_state");
  CHECK(std::string(mode_name(Mode::kRecordedBacktrack)) == "recorded_backtrack");
}

TEST_CASE("shortest-path routing follows the path fixture end to end", "[protocols][sp]") {
  const auto line = fx::line5();
  CHECK(sp_route(line.graph, 0, 4) == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(sp_route(line.graph, 2, 2) == std::vector<NodeId>{2});

  const auto corridor = fx::uvoid();
  CHECK(sp_route(corridor.graph, fx::kUvoidS, fx::kUvoidD) ==
        std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("shortest-path ties resolve to the lowest next hop", "[protocols][sp]") {
  const auto d = fx::diamond();
  CHECK(sp_route(d.graph, 0, 3) == std::vector<NodeId>{0, 1, 3});
  CHECK(sp_route(d.graph, 3, 0) == std::vector<NodeId>{3, 1, 0});
}

TEST_CASE("shortest-path routing refuses unreachable pairs", "[protocols][sp]") {
  const auto split = fx::make_deployment(10, 1, 1.0, {{0, 0}, {10, 0}});
  CHECK_THROWS_AS(sp_route(build_graph(split), 0, 1), std::runtime_error);
}

TEST_CASE("the path fixture survives planarization unchanged", "[protocols][gpsr]") {
  const auto line = fx::line5();
  const auto pos = line.dep.perceived_positions();
  const auto planar = planarize_gabriel(line.graph, pos);
  for (NodeId u = 0; u < 5; ++u) {
    const auto nb = planar.neighbors(u);
    const auto full = line.graph.neighbors(u);
    REQUIRE(std::vector<NodeId>(nb.begin(), nb.end()) ==
            std::vector<NodeId>(full.begin(), full.end()));
  }
}

TEST_CASE("a witness inside the diametral disk removes the edge", "[protocols][gpsr]") {
  // Node 2 sits just off the segment 0-1, strictly inside its diametral disk,
  // and is adjacent to both endpoints: the long edge must go.
  const auto d = fx::make_deployment(2, 1, 2.0, {{0, 0}, {2, 0}, {1, 0.1}});
  const auto g = build_graph(d);
  REQUIRE(g.has_edge(0, 1));
  const auto pos = d.perceived_positions();
  const auto planar = planarize_gabriel(g, pos);
  const auto nb0 = planar.neighbors(0);
  CHECK(std::find(nb0.begin(), nb0.end(), 1) == nb0.end());
  const auto nb1 = planar.neighbors(1);
  CHECK(std::find(nb1.begin(), nb1.end(), 0) == nb1.end());
  CHECK(std::find(nb0.begin(), nb0.end(), 2) != nb0.end());
}

TEST_CASE("planarization matches the dot-product oracle on random graphs",
          "[protocols][gpsr]") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto d = generate_deployment(60, 200, 200, 50, seed);
    const auto g = build_graph(d);
    const auto pos = d.perceived_positions();
    const auto planar = planarize_gabriel(g, pos);
    for (NodeId u = 0; u < g.size(); ++u) {
      std::vector<NodeId> expected;
      for (NodeId v : g.neighbors(u))
        if (oracles::gabriel_keeps(g, pos, u, v)) expected.push_back(v);
      const auto got = planar.neighbors(u);
      INFO("seed " << seed << " node " << u);
      REQUIRE(std::vector<NodeId>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("planarization keeps connected deployments connected", "[protocols][gpsr]") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto d = generate_deployment(80, 300, 300, 60, seed);
    const auto g = build_graph(d);
    if (!is_connected(g)) continue;
    const auto pos = d.perceived_positions();
    const auto planar = planarize_gabriel(g, pos);
    std::vector<std::vector<NodeId>> adj(planar.size());
    for (NodeId u = 0; u < planar.size(); ++u) {
      const auto nb = planar.neighbors(u);
      adj[u].assign(nb.begin(), nb.end());
    }
    INFO("seed " << seed);
    REQUIRE(is_connected(Graph(std::move(adj))));
  }
}

TEST_CASE("greedy forwarding delivers along the path but dies at the void",
          "[protocols][gf]") {
  Scenario line(fx::line5(), VcTable{});
  const auto ok = route_packet(line.views, ProtocolKind::kGf, 0, 4, 20);
  CHECK(ok.delivered);
  CHECK(ok.hops == 4);
  CHECK(ok.path == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(ok.mode_transitions == Transitions{{0, Mode::kGreedyGeo}});

  Scenario corridor(fx::uvoid(), VcTable{});
  const auto stuck = route_packet(corridor.views, ProtocolKind::kGf, fx::kUvoidS, fx::kUvoidD, 32);
  CHECK_FALSE(stuck.delivered);
  CHECK(stuck.hops == 0);
  REQUIRE(stuck.drop_reason.has_value());
  CHECK(*stuck.drop_reason == DropReason::kNoProgress);
}

TEST_CASE("face routing walks the corridor in exactly seven hops", "[protocols][gpsr]") {
  Scenario corridor(fx::uvoid(), VcTable{});
  const auto out = route_packet(corridor.views, ProtocolKind::kGpsr, fx::kUvoidS, fx::kUvoidD, 32);
  REQUIRE(out.delivered);
  CHECK(out.hops == 7);
  CHECK(out.path == std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7});
  // One face episode: entered at the mouth, exited three hops in, where the
  // geographic distance first drops below the void distance.
  CHECK(out.mode_transitions == Transitions{{0, Mode::kGreedyGeo},
                                            {0, Mode::kFace},
                                            {3, Mode::kGreedyGeo}});
}

TEST_CASE("face routing detects an exhausted face as a loop", "[protocols][gpsr]") {
  // Triangle plus a node far beyond range: circling the outer face must end
  // in a loop drop, not run the ttl out.
  const auto d = fx::make_deployment(10, 1, 1.0,
                                     {{0, 0}, {1, 0}, {0.5, 0.5}, {10, 0}});
  fx::Fixture f{d, build_graph(d)};
  Scenario s(std::move(f), VcTable{});
  const auto out = route_packet(s.views, ProtocolKind::kGpsr, 0, 3, 64);
  CHECK_FALSE(out.delivered);
  REQUIRE(out.drop_reason.has_value());
  CHECK(*out.drop_reason == DropReason::kLoopDetected);
}

TEST_CASE("gpsr delivers everything on small connected zero-error fields",
          "[protocols][gpsr]") {
  int scenarios = 0;
  for (std::uint64_t seed = 1; scenarios < 6 && seed < 60; ++seed) {
    const auto d = generate_deployment(30, 120, 120, 45, seed);
    const auto g = build_graph(d);
    if (!is_connected(g)) continue;
    ++scenarios;
    fx::Fixture f{d, g};
    Scenario s(std::move(f), VcTable{});
    for (NodeId src = 0; src < g.size(); ++src)
      for (NodeId dst = 0; dst < g.size(); ++dst) {
        if (src == dst) continue;
        const auto out = route_packet(s.views, ProtocolKind::kGpsr, src, dst,
                                      4 * static_cast<int>(g.size()));
        INFO("seed " << seed << " pair " << src << "->" << dst);
        REQUIRE(out.delivered);
      }
  }
  REQUIRE(scenarios == 6);
}

TEST_CASE("vcap arrives at an impostor and reports the ambiguity", "[protocols][vcap]") {
  const auto arms = fx::twoarms();
  const auto t = assign_coordinates(arms.graph, AnchorSet{{fx::kArmsA1, fx::kArmsA2}});
  Scenario s(fx::twoarms(), t);
  const auto out = route_packet(s.views, ProtocolKind::kVcap, fx::kArmsB3, fx::kArmsT2, 32);
  CHECK_FALSE(out.delivered);
  REQUIRE(out.drop_reason.has_value());
  CHECK(*out.drop_reason == DropReason::kUnreachableState);
  CHECK(out.path == std::vector<NodeId>{fx::kArmsB3, fx::kArmsB2});
}

TEST_CASE("vcap takes one forced detour and recovers", "[protocols][vcap]") {
  Scenario s(fx::vcap_detour(), fx::vcap_detour_vc());
  const auto out = route_packet(s.views, ProtocolKind::kVcap, 0, 4, 20);
  REQUIRE(out.delivered);
  CHECK(out.path == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(out.hops == 4);
}

TEST_CASE("vcap drops when the detour budget is exhausted", "[protocols][vcap]") {
  Scenario s(fx::vcap_plateau(), fx::vcap_plateau_vc());
  const auto out = route_packet(s.views, ProtocolKind::kVcap, 0, 4, 20);
  CHECK_FALSE(out.delivered);
  REQUIRE(out.drop_reason.has_value());
  CHECK(*out.drop_reason == DropReason::kNoProgress);
  // Three forced hops along the plateau, then the fourth is refused.
  CHECK(out.path == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("a wider budget lets the plateau walk reach its dead end", "[protocols][vcap]") {
  Scenario s(fx::vcap_plateau(), fx::vcap_plateau_vc());
  s.views.vcap_detour_budget = 10;
  const auto out = route_packet(s.views, ProtocolKind::kVcap, 0, 4, 20);
  CHECK_FALSE(out.delivered);
  CHECK(out.path == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("the depth-first router explores the spur and rewinds out of it",
          "[protocols][lcr]") {
  const auto branch = fx::vcbranch();
  const auto t = assign_coordinates(branch.graph, AnchorSet{{fx::kBranchA, fx::kBranchS2}});
  REQUIRE(t.vc(fx::kBranchS1)[0] == 2);
  REQUIRE(t.vc(fx::kBranchC)[0] == 2);
  Scenario s(fx::vcbranch(), t, MetricKind::kVcSemiManhattan);
  const auto out = route_packet(s.views, ProtocolKind::kLcr, fx::kBranchA, fx::kBranchD, 24);
  REQUIRE(out.delivered);
  // The spur head ties the chain at semi-Manhattan 0 and wins on id; the
  // recorded route excludes the explored-and-rewound spur.
  CHECK(out.path == std::vector<NodeId>{fx::kBranchA, fx::kBranchB, fx::kBranchC, fx::kBranchD});
  CHECK(out.hops == 3);
  CHECK(out.total_forwards == 5);
  CHECK(out.mode_transitions == Transitions{{0, Mode::kVcGreedy},
                                            {1, Mode::kRecordedBacktrack},
                                            {2, Mode::kVcGreedy}});
  CHECK(out.mode_forwards[static_cast<int>(Mode::kRecordedBacktrack)] == 1);
}

TEST_CASE("the depth-first router is complete on connected graphs", "[protocols][lcr]") {
  int scenarios = 0;
  for (std::uint64_t seed = 1; scenarios < 5 && seed < 60; ++seed) {
    const auto d = generate_deployment(40, 150, 150, 50, seed);
    const auto g = build_graph(d);
    if (!is_connected(g)) continue;
    ++scenarios;
    const auto t = assign_coordinates(g, select_anchors(g, d, 4, AnchorStrategy::kCorners));
    fx::Fixture f{d, g};
    Scenario s(std::move(f), t);
    const int n = static_cast<int>(g.size());
    for (NodeId src = 0; src < g.size(); ++src) {
      const NodeId dst = static_cast<NodeId>((src + 17) % g.size());
      if (src == dst) continue;
      const auto out = route_packet(s.views, ProtocolKind::kLcr, src, dst, 4 * n);
      INFO("seed " << seed << " pair " << src << "->" << dst);
      REQUIRE(out.delivered);
      REQUIRE(out.total_forwards <= n);
    }
  }
  REQUIRE(scenarios == 5);
}

TEST_CASE("the beacon router walks down the anchor gradient after a stall",
          "[protocols][bvr]") {
  Scenario s(fx::bvr_chain(), fx::bvr_chain_vc());
  const auto out = route_packet(s.views, ProtocolKind::kBvr, 0, 3, 20);
  REQUIRE(out.delivered);
  CHECK(out.path == std::vector<NodeId>{0, 1, 2, 3});
  CHECK(out.mode_transitions == Transitions{{0, Mode::kVcGreedy},
                                            {0, Mode::kAnchorFallback}});
  CHECK(out.mode_forwards[static_cast<int>(Mode::kAnchorFallback)] == 3);
}

TEST_CASE("the beacon router gives up at the anchor itself", "[protocols][bvr]") {
  const auto arms = fx::twoarms();
  const auto t = assign_coordinates(arms.graph, AnchorSet{{fx::kArmsA1, fx::kArmsA2}});
  Scenario s(fx::twoarms(), t);
  const auto out = route_packet(s.views, ProtocolKind::kBvr, fx::kArmsB3, fx::kArmsT2, 32);
  CHECK_FALSE(out.delivered);
  REQUIRE(out.drop_reason.has_value());
  CHECK(*out.drop_reason == DropReason::kNoProgress);
  // Greedy reaches the impostor column, stalls, then descends coordinate 0
  // all the way to its anchor and stops there.
  CHECK(out.path == std::vector<NodeId>{fx::kArmsB3, fx::kArmsB2, fx::kArmsB1, fx::kArmsA1});
  CHECK(out.mode_transitions == Transitions{{0, Mode::kVcGreedy},
                                            {1, Mode::kAnchorFallback}});
}

TEST_CASE("the hybrid router rides coordinates around the corridor", "[protocols][hgr]") {
  const auto corridor = fx::uvoid();
  const auto t = assign_coordinates(corridor.graph, AnchorSet{{fx::kUvoidL2, fx::kUvoidD}});
  Scenario s(fx::uvoid(), t);
  const auto out = route_packet(s.views, ProtocolKind::kHgr, fx::kUvoidS, fx::kUvoidD, 32);
  REQUIRE(out.delivered);
  CHECK(out.hops == 7);
  CHECK(out.path == std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7});
  // Void at the mouth; the second dimension (hops to the destination's
  // anchor) has the larger gap and strictly decreases down the corridor; the
  // exit fires where geography first beats the void distance.
  CHECK(out.mode_transitions == Transitions{{0, Mode::kGreedyGeo},
                                            {0, Mode::kVcGreedy},
                                            {3, Mode::kGreedyGeo}});
}

TEST_CASE("the hybrid router descends a coordinate when no gap closes",
          "[protocols][hgr]") {
  Scenario s(fx::uvoid(), fx::uvoid_backtrack_vc());
  const auto out = route_packet(s.views, ProtocolKind::kHgr, fx::kUvoidS, fx::kUvoidD, 32);
  REQUIRE(out.delivered);
  CHECK(out.hops == 7);
  CHECK(out.mode_transitions == Transitions{{0, Mode::kGreedyGeo},
                                            {0, Mode::kVcBacktrack},
                                            {1, Mode::kVcGreedy},
                                            {3, Mode::kGreedyGeo}});
  CHECK(out.mode_forwards[static_cast<int>(Mode::kVcBacktrack)] == 1);
}

TEST_CASE("the hybrid router never exceeds n-1 forwards", "[protocols][hgr]") {
  int scenarios = 0;
  for (std::uint64_t seed = 1; scenarios < 5 && seed < 60; ++seed) {
    const auto d = generate_deployment(40, 150, 150, 50, seed);
    const auto g = build_graph(d);
    if (!is_connected(g)) continue;
    ++scenarios;
    const auto t = assign_coordinates(g, select_anchors(g, d, 4, AnchorStrategy::kCorners));
    fx::Fixture f{d, g};
    Scenario s(std::move(f), t);
    const int n = static_cast<int>(g.size());
    for (NodeId src = 0; src < g.size(); ++src)
      for (NodeId dst = 0; dst < g.size(); ++dst) {
        if (src == dst) continue;
        const auto out = route_packet(s.views, ProtocolKind::kHgr, src, dst, 4 * n);
        INFO("seed " << seed << " pair " << src << "->" << dst);
        REQUIRE(out.total_forwards <= n - 1);
        REQUIRE(out.delivered);
      }
  }
  REQUIRE(scenarios == 5);
}

TEST_CASE("coordinate-based protocols demand a coordinate table", "[protocols]") {
  Scenario s(fx::line5(), VcTable{});
  for (auto p : {ProtocolKind::kVcap, ProtocolKind::kLcr, ProtocolKind::kBvr, ProtocolKind::kHgr})
    CHECK_THROWS_AS(route_packet(s.views, p, 0, 4, 20), std::invalid_argument);
}
