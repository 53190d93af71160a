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

#ifndef VCGR_ANOMALY_HPP_
#define VCGR_ANOMALY_HPP_

#include <array>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcgr/metrics.hpp"
#include "vcgr/topology.hpp"
#include "vcgr/vcs.hpp"

namespace vcgr {

inline constexpr std::size_t kWitnessCap = 100;

struct CounterResult {
  long long count = 0;
  std::vector<std::pair<NodeId, NodeId>> witnesses;  // up to kWitnessCap (node, dest) pairs
};

namespace detail {

// Scans one (node, dest) pair under one metric: is the forwarding set empty,
// and does any neighbor tie the node's own distance exactly?
inline void scan_pair(const Graph& g, const VcTable& t, MetricKind m, NodeId u, NodeId d,
                      bool& fs_empty, bool& tie) {
  const auto dest = t.vc(d);
  long long here = 0;
  switch (m) {
    case MetricKind::kVcEuclidean: here = vc_euclidean_sq_key(t.vc(u), dest); break;
    case MetricKind::kVcManhattan: here = vc_manhattan_key(t.vc(u), dest); break;
    case MetricKind::kVcSemiManhattan: here = vc_semi_manhattan_key(t.vc(u), dest); break;
    case MetricKind::kGeoEuclidean:
      throw std::invalid_argument("anomaly counters accept VC metrics only");
  }
  fs_empty = true;
  tie = false;
  for (NodeId nb : g.neighbors(u)) {
    long long k = 0;
    switch (m) {
      case MetricKind::kVcEuclidean: k = vc_euclidean_sq_key(t.vc(nb), dest); break;
      case MetricKind::kVcManhattan: k = vc_manhattan_key(t.vc(nb), dest); break;
      case MetricKind::kVcSemiManhattan: k = vc_semi_manhattan_key(t.vc(nb), dest); break;
      case MetricKind::kGeoEuclidean: break;
    }
    if (k < here) {
      fs_empty = false;
      return;
    }
    if (k == here) tie = true;
  }
}

}  // namespace detail

// Ordered pairs (u, d) whose forwarding set is empty while some neighbor sits
// at exactly the node's own distance: greedy cannot break the tie.
inline CounterResult count_equal_distance_stalls(const Graph& g, const VcTable& t, MetricKind m) {
  CounterResult r;
  const std::size_t n = g.size();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId d = 0; d < n; ++d) {
      if (u == d) continue;
      bool fs_empty = false, tie = false;
      detail::scan_pair(g, t, m, u, d, fs_empty, tie);
      if (fs_empty && tie) {
        ++r.count;
        if (r.witnesses.size() < kWitnessCap) r.witnesses.emplace_back(u, d);
      }
    }
  }
  return r;
}

// Ordered pairs (u, d) with an empty forwarding set under every given metric:
// the node is a local minimum no matter how distance is measured.
inline CounterResult count_local_minima(const Graph& g, const VcTable& t,
                                        std::span<const MetricKind> metrics) {
  if (metrics.empty())
    throw std::invalid_argument("count_local_minima: need at least one metric");
  CounterResult r;
  const std::size_t n = g.size();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId d = 0; d < n; ++d) {
      if (u == d) continue;
      bool all_empty = true;
      for (MetricKind m : metrics) {
        bool fs_empty = false, tie = false;
        detail::scan_pair(g, t, m, u, d, fs_empty, tie);
        if (!fs_empty) {
          all_empty = false;
          break;
        }
      }
      if (all_empty) {
        ++r.count;
        if (r.witnesses.size() < kWitnessCap) r.witnesses.emplace_back(u, d);
      }
    }
  }
  return r;
}

struct ZoneCensus {
  long long total = 0;
  long long expanded = 0;
  long long disconnected = 0;
  int max_span = 0;
};

struct AnomalyReport {
  long long n_pairs = 0;
  long long stalls_vc_ed = 0;
  long long stalls_vc_md = 0;
  long long stalls_vc_smd = 0;
  long long minima_vc_ed = 0;
  long long minima_vc_md = 0;
  long long minima_vc_smd = 0;
  long long minima_all_metrics = 0;
  ZoneCensus zones;
  double density = 0.0;  // mean node degree
};

inline AnomalyReport build_report(const Graph& g, const Deployment& d, const VcTable& t) {
  AnomalyReport rep;
  const std::size_t n = g.size();
  rep.n_pairs = static_cast<long long>(n) * (static_cast<long long>(n) - 1);
  rep.density = g.mean_degree();
  (void)d;

  constexpr std::array<MetricKind, 3> kVcMetrics{
      MetricKind::kVcEuclidean, MetricKind::kVcManhattan, MetricKind::kVcSemiManhattan};
  // Single sweep over the pair space feeding all seven counters.
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId dd = 0; dd < n; ++dd) {
      if (u == dd) continue;
      std::array<bool, 3> empty{}, tie{};
      for (std::size_t i = 0; i < kVcMetrics.size(); ++i)
        detail::scan_pair(g, t, kVcMetrics[i], u, dd, empty[i], tie[i]);
      if (empty[0] && tie[0]) ++rep.stalls_vc_ed;
      if (empty[1] && tie[1]) ++rep.stalls_vc_md;
      if (empty[2] && tie[2]) ++rep.stalls_vc_smd;
      if (empty[0]) ++rep.minima_vc_ed;
      if (empty[1]) ++rep.minima_vc_md;
      if (empty[2]) ++rep.minima_vc_smd;
      if (empty[0] && empty[1] && empty[2]) ++rep.minima_all_metrics;
    }
  }

  for (const VcZone& z : find_vc_zones(g, t)) {
    ++rep.zones.total;
    if (z.expanded()) ++rep.zones.expanded;
    if (!z.connected) ++rep.zones.disconnected;
    if (z.span_hops > rep.zones.max_span) rep.zones.max_span = z.span_hops;
  }
  return rep;
}

// Flat key-value block, one `key = value` line per field.
inline void save_report_kv(std::ostream& os, const AnomalyReport& r) {
  os << "n_pairs = " << r.n_pairs << '\n'
     << "stalls_vc_ed = " << r.stalls_vc_ed << '\n'
     << "stalls_vc_md = " << r.stalls_vc_md << '\n'
     << "stalls_vc_smd = " << r.stalls_vc_smd << '\n'
     << "minima_vc_ed = " << r.minima_vc_ed << '\n'
     << "minima_vc_md = " << r.minima_vc_md << '\n'
     << "minima_vc_smd = " << r.minima_vc_smd << '\n'
     << "minima_all_metrics = " << r.minima_all_metrics << '\n'
     << "zones_total = " << r.zones.total << '\n'
     << "zones_expanded = " << r.zones.expanded << '\n'
     << "zones_disconnected = " << r.zones.disconnected << '\n'
     << "zones_max_span = " << r.zones.max_span << '\n'
     << "mean_degree = " << r.density << '\n';
}

namespace detail {

// Fixed formatting for CSV numerics: 6 significant digits, C locale.
inline std::string format_g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace detail

inline std::string report_csv_header() {
  return "n_pairs,stalls_vc_ed,stalls_vc_md,stalls_vc_smd,minima_vc_ed,minima_vc_md,"
         "minima_vc_smd,minima_all_metrics,zones_total,zones_expanded,zones_disconnected,"
         "zones_max_span,mean_degree";
}

inline std::string report_csv_row(const AnomalyReport& r) {
  std::string row;
  const auto add = [&row](long long v) {
    row += std::to_string(v);
    row += ',';
  };
  add(r.n_pairs);
  add(r.stalls_vc_ed);
  add(r.stalls_vc_md);
  add(r.stalls_vc_smd);
  add(r.minima_vc_ed);
  add(r.minima_vc_md);
  add(r.minima_vc_smd);
  add(r.minima_all_metrics);
  add(r.zones.total);
  add(r.zones.expanded);
  add(r.zones.disconnected);
  add(r.zones.max_span);
  row += detail::format_g6(r.density);
  return row;
}

}  // namespace vcgr

#endif  // VCGR_ANOMALY_HPP_
