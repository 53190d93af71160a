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

#ifndef VCGR_METRICS_HPP_
#define VCGR_METRICS_HPP_

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcgr/geometry.hpp"
#include "vcgr/topology.hpp"
#include "vcgr/vcs.hpp"

namespace vcgr {

enum class MetricKind { kGeoEuclidean, kVcEuclidean, kVcManhattan, kVcSemiManhattan };

inline MetricKind parse_metric(const std::string& s) {
  if (s == "geo-ed") return MetricKind::kGeoEuclidean;
  if (s == "vc-ed") return MetricKind::kVcEuclidean;
  if (s == "vc-md") return MetricKind::kVcManhattan;
  if (s == "vc-smd") return MetricKind::kVcSemiManhattan;
  throw std::invalid_argument("unknown metric '" + s + "'");
}

inline const char* metric_name(MetricKind m) {
  switch (m) {
    case MetricKind::kGeoEuclidean: return "geo-ed";
    case MetricKind::kVcEuclidean: return "vc-ed";
    case MetricKind::kVcManhattan: return "vc-md";
    case MetricKind::kVcSemiManhattan: return "vc-smd";
  }
  return "?";
}

inline double geo_euclidean(Point p, Point q) { return distance(p, q); }

namespace detail {

inline void check_dims(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("vc metric: dimension mismatch (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
}

// Integer-exact comparison keys. Hop counts are small, so the squared
// euclidean and both Manhattan sums fit comfortably in 64 bits.
inline long long vc_euclidean_sq_key(std::span<const int> u, std::span<const int> v) {
  check_dims(u, v);
  long long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const long long d = static_cast<long long>(u[i]) - v[i];
    s += d * d;
  }
  return s;
}

inline long long vc_manhattan_key(std::span<const int> u, std::span<const int> v) {
  check_dims(u, v);
  long long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    s += std::abs(static_cast<long long>(u[i]) - v[i]);
  return s;
}

inline long long vc_semi_manhattan_key(std::span<const int> u, std::span<const int> dest) {
  check_dims(u, dest);
  long long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const long long d = static_cast<long long>(u[i]) - dest[i];
    if (d > 0) s += d;
  }
  return s;
}

}  // namespace detail

inline double vc_euclidean(std::span<const int> u, std::span<const int> v) {
  return std::sqrt(static_cast<double>(detail::vc_euclidean_sq_key(u, v)));
}

inline double vc_manhattan(std::span<const int> u, std::span<const int> v) {
  return static_cast<double>(detail::vc_manhattan_key(u, v));
}

// One-sided sum of the sender's excess hop counts. Asymmetric by design:
// components where the destination is farther from the anchor contribute 0.
inline double vc_semi_manhattan(std::span<const int> u, std::span<const int> dest) {
  return static_cast<double>(detail::vc_semi_manhattan_key(u, dest));
}

// The coordinate sources a metric evaluation may need. `positions` are the
// perceived positions; `vc` may be null when only geographic metrics run.
struct MetricViews {
  std::span<const Point> positions;
  const VcTable* vc = nullptr;
};

// Destination as seen by a router: a perceived position and/or a VC vector.
struct Dest {
  Point pos;
  std::vector<int> vc;
};

inline Dest make_dest(const MetricViews& views, NodeId dst) {
  Dest d;
  if (dst < views.positions.size()) d.pos = views.positions[dst];
  if (views.vc != nullptr) {
    const auto c = views.vc->vc(dst);
    d.vc.assign(c.begin(), c.end());
  }
  return d;
}

namespace detail {

// Distance key for ordering candidates under one metric. Exact for the
// integer VC metrics; IEEE doubles (squared geo distance) otherwise.
struct DistKey {
  double geo = 0.0;
  long long vc = 0;
  bool is_vc = false;

  friend bool operator<(const DistKey& a, const DistKey& b) {
    return a.is_vc ? a.vc < b.vc : a.geo < b.geo;
  }
  friend bool operator==(const DistKey& a, const DistKey& b) {
    return a.is_vc ? a.vc == b.vc : a.geo == b.geo;
  }
};

inline DistKey dist_key(MetricKind metric, const MetricViews& views, NodeId v, const Dest& dest) {
  DistKey k;
  if (metric == MetricKind::kGeoEuclidean) {
    if (v >= views.positions.size())
      throw std::invalid_argument("metric views: node " + std::to_string(v) + " has no position");
    k.geo = distance_sq(views.positions[v], dest.pos);
    return k;
  }
  if (views.vc == nullptr)
    throw std::invalid_argument("metric views: VC table required but missing");
  if (v >= views.vc->node_count())
    throw std::invalid_argument("metric views: node " + std::to_string(v) + " has no VC entry");
  k.is_vc = true;
  const auto u = views.vc->vc(v);
  switch (metric) {
    case MetricKind::kVcEuclidean: k.vc = vc_euclidean_sq_key(u, dest.vc); break;
    case MetricKind::kVcManhattan: k.vc = vc_manhattan_key(u, dest.vc); break;
    case MetricKind::kVcSemiManhattan: k.vc = vc_semi_manhattan_key(u, dest.vc); break;
    case MetricKind::kGeoEuclidean: break;  // handled above
  }
  return k;
}

}  // namespace detail

// Reporting-friendly distance (not the comparison key): true metric value.
inline double metric_distance(MetricKind metric, const MetricViews& views, NodeId v,
                              const Dest& dest) {
  const auto k = detail::dist_key(metric, views, v, dest);
  return k.is_vc && metric != MetricKind::kVcEuclidean
             ? static_cast<double>(k.vc)
             : (k.is_vc ? std::sqrt(static_cast<double>(k.vc)) : std::sqrt(k.geo));
}

// Neighbors strictly closer to the destination than `current`. Ties with the
// current distance are excluded: an all-ties neighborhood is a stall, not an
// option set. Order follows the input neighbor order (ascending ids).
inline std::vector<NodeId> forwarding_set(NodeId current, std::span<const NodeId> neighbors,
                                          const Dest& dest, MetricKind metric,
                                          const MetricViews& views) {
  const auto here = detail::dist_key(metric, views, current, dest);
  std::vector<NodeId> out;
  for (NodeId v : neighbors) {
    if (detail::dist_key(metric, views, v, dest) < here) out.push_back(v);
  }
  return out;
}

}  // namespace vcgr

#endif  // VCGR_METRICS_HPP_
