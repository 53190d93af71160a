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

#ifndef VCGR_TOPOLOGY_HPP_
#define VCGR_TOPOLOGY_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcgr/geometry.hpp"
#include "vcgr/rng.hpp"

namespace vcgr {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct NodeRecord {
  NodeId id = 0;
  Point true_pos;       // physical location; defines connectivity
  Point perceived_pos;  // location the node believes it has; drives routing
};

// A fixed placement of nodes in a rectangular field. Immutable once built.
struct Deployment {
  std::vector<NodeRecord> nodes;
  double field_width = 0.0;
  double field_height = 0.0;
  double radio_range = 0.0;
  std::uint64_t seed = 0;

  std::size_t size() const { return nodes.size(); }

  std::vector<Point> perceived_positions() const {
    std::vector<Point> p;
    p.reserve(nodes.size());
    for (const auto& n : nodes) p.push_back(n.perceived_pos);
    return p;
  }

  std::vector<Point> true_positions() const {
    std::vector<Point> p;
    p.reserve(nodes.size());
    for (const auto& n : nodes) p.push_back(n.true_pos);
    return p;
  }
};

// Undirected unit-disk adjacency. Neighbor lists are sorted by id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::vector<NodeId>> adjacency)
      : adj_(std::move(adjacency)) {}

  std::size_t size() const { return adj_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_[v].data(), adj_[v].size()};
  }

  bool has_edge(NodeId u, NodeId v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  double mean_degree() const {
    if (adj_.empty()) return 0.0;
    return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(adj_.size());
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
};

// Uniform i.i.d. placement over the field. perceived == true until error is
// injected. Draw order is per node: x then y, so a deployment is a pure
// function of (n, field, seed).
inline Deployment generate_deployment(std::size_t n, double field_w, double field_h,
                                      double radio_range, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_deployment: n must be >= 2");
  if (field_w <= 0 || field_h <= 0)
    throw std::invalid_argument("generate_deployment: field dimensions must be positive");
  if (radio_range <= 0)
    throw std::invalid_argument("generate_deployment: radio_range must be positive");

  Deployment d;
  d.field_width = field_w;
  d.field_height = field_h;
  d.radio_range = radio_range;
  d.seed = seed;
  d.nodes.reserve(n);
  SeededRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p{rng.next_unit() * field_w, rng.next_unit() * field_h};
    d.nodes.push_back(NodeRecord{static_cast<NodeId>(i), p, p});
  }
  return d;
}

// Edge iff true-position distance <= radio_range (inclusive). Perceived
// positions never affect adjacency.
inline Graph build_graph(const Deployment& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<NodeId>> adj(n);
  const double r2 = d.radio_range * d.radio_range;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance_sq(d.nodes[i].true_pos, d.nodes[j].true_pos) <= r2) {
        adj[i].push_back(static_cast<NodeId>(j));
        adj[j].push_back(static_cast<NodeId>(i));
      }
    }
  }
  return Graph(std::move(adj));
}

// BFS hop distances from src; -1 marks unreachable nodes.
inline std::vector<int> hop_distances(const Graph& g, NodeId src) {
  std::vector<int> dist(g.size(), -1);
  std::deque<NodeId> queue;
  dist[src] = 0;
  queue.push_back(src);
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline std::optional<int> shortest_hops(const Graph& g, NodeId src, NodeId dst) {
  if (src >= g.size() || dst >= g.size())
    throw std::invalid_argument("shortest_hops: node id out of range");
  if (src == dst) return 0;
  const auto dist = hop_distances(g, src);
  if (dist[dst] < 0) return std::nullopt;
  return dist[dst];
}

inline bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  const auto dist = hop_distances(g, 0);
  for (int d : dist)
    if (d < 0) return false;
  return true;
}

// Perturbs perceived positions only: uniform random angle, length uniform in
// [0, magnitude * radio_range]. Adjacency is untouched.
inline Deployment inject_localization_error(const Deployment& d, double magnitude,
                                            std::uint64_t seed) {
  if (magnitude < 0)
    throw std::invalid_argument("inject_localization_error: magnitude must be >= 0");
  Deployment out = d;
  SeededRng rng(seed);
  const double max_len = magnitude * d.radio_range;
  for (auto& node : out.nodes) {
    const double angle = rng.next_unit() * 2.0 * std::numbers::pi;
    const double len = rng.next_unit() * max_len;
    node.perceived_pos =
        Point{node.true_pos.x + len * std::cos(angle), node.true_pos.y + len * std::sin(angle)};
  }
  return out;
}

namespace detail {

inline void append_double(std::string& out, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

inline double parse_double(const std::string& tok, int line_no) {
  double v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw std::runtime_error("deployment parse error at line " + std::to_string(line_no) +
                             ": bad number '" + tok + "'");
  return v;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

// Plain-text form: header `n w h range seed`, then one `id x y px py` line per
// node. Doubles use shortest round-tripping decimal form, '.' separator.
inline void save_deployment(std::ostream& os, const Deployment& d) {
  std::string out;
  out += std::to_string(d.size());
  out += ' ';
  detail::append_double(out, d.field_width);
  out += ' ';
  detail::append_double(out, d.field_height);
  out += ' ';
  detail::append_double(out, d.radio_range);
  out += ' ';
  out += std::to_string(d.seed);
  out += '\n';
  for (const auto& n : d.nodes) {
    out += std::to_string(n.id);
    out += ' ';
    detail::append_double(out, n.true_pos.x);
    out += ' ';
    detail::append_double(out, n.true_pos.y);
    out += ' ';
    detail::append_double(out, n.perceived_pos.x);
    out += ' ';
    detail::append_double(out, n.perceived_pos.y);
    out += '\n';
  }
  os << out;
}

inline Deployment load_deployment(std::istream& is) {
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line))
    throw std::runtime_error("deployment parse error at line 1: missing header");
  ++line_no;
  auto header = detail::split_ws(line);
  if (header.size() != 5)
    throw std::runtime_error("deployment parse error at line 1: header needs 'n w h range seed'");
  Deployment d;
  const auto n = static_cast<std::size_t>(detail::parse_double(header[0], line_no));
  d.field_width = detail::parse_double(header[1], line_no);
  d.field_height = detail::parse_double(header[2], line_no);
  d.radio_range = detail::parse_double(header[3], line_no);
  d.seed = static_cast<std::uint64_t>(std::stoull(header[4]));
  d.nodes.reserve(n);
  while (std::getline(is, line)) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 5)
      throw std::runtime_error("deployment parse error at line " + std::to_string(line_no) +
                               ": expected 'id x y px py'");
    NodeRecord rec;
    rec.id = static_cast<NodeId>(std::stoul(toks[0]));
    rec.true_pos = {detail::parse_double(toks[1], line_no), detail::parse_double(toks[2], line_no)};
    rec.perceived_pos = {detail::parse_double(toks[3], line_no),
                         detail::parse_double(toks[4], line_no)};
    d.nodes.push_back(rec);
  }
  if (d.nodes.size() != n)
    throw std::runtime_error("deployment parse error: header says " + std::to_string(n) +
                             " nodes, file has " + std::to_string(d.nodes.size()));
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (d.nodes[i].id != i)
      throw std::runtime_error("deployment parse error: node ids must be dense 0..n-1");
  return d;
}

}  // namespace vcgr

#endif  // VCGR_TOPOLOGY_HPP_
