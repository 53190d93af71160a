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

#ifndef VCGR_HARNESS_HPP_
#define VCGR_HARNESS_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vcgr/anomaly.hpp"
#include "vcgr/engine.hpp"
#include "vcgr/metrics.hpp"
#include "vcgr/protocols.hpp"
#include "vcgr/rng.hpp"
#include "vcgr/topology.hpp"
#include "vcgr/vcs.hpp"

namespace vcgr {

inline constexpr int kMaxConnectivityRetries = 1000;

struct PairSpec {
  enum class Kind { kAuto, kAll, kRandom, kExplicit };
  Kind kind = Kind::kAuto;
  std::size_t count = 0;  // kRandom
  std::vector<std::pair<NodeId, NodeId>> explicit_pairs;
};

struct ScenarioConfig {
  std::size_t n = 250;
  double field_w = 1000.0;
  double field_h = 1000.0;
  double radio_range = 100.0;
  std::uint64_t seed = 1;
  std::size_t anchors_k = 4;
  AnchorStrategy anchor_strategy = AnchorStrategy::kCorners;
  MetricKind metric = MetricKind::kVcEuclidean;  // vcap/lcr greedy measure
  double loc_error = 0.0;
  std::vector<ProtocolKind> protocols = {
      ProtocolKind::kSp,  ProtocolKind::kGf,  ProtocolKind::kGpsr, ProtocolKind::kVcap,
      ProtocolKind::kLcr, ProtocolKind::kBvr, ProtocolKind::kHgr};
  PairSpec pairs;
  int ttl_mult = 4;
  std::string node_file;  // when set, the deployment is loaded, not generated
};

namespace detail {

inline constexpr std::uint64_t kErrorSeedTag = 0x6c6f6365727221ull;
inline constexpr std::uint64_t kPairSeedTag = 0x7061697273216bull;

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(trim(s.substr(start)));
      break;
    }
    parts.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return parts;
}

inline double parse_config_double(const std::string& key, const std::string& value, int line) {
  double v = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw std::runtime_error("config line " + std::to_string(line) + ": key '" + key +
                             "' needs a number, got '" + value + "'");
  return v;
}

inline std::uint64_t parse_config_u64(const std::string& key, const std::string& value, int line) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw std::runtime_error("config line " + std::to_string(line) + ": key '" + key +
                             "' needs a nonnegative integer, got '" + value + "'");
  return v;
}

}  // namespace detail

// Flat `key = value` text; '#' starts a comment; unknown keys are rejected.
inline ScenarioConfig parse_config(std::istream& is) {
  ScenarioConfig cfg;
  std::string line;
  int line_no = 0;
  bool protocols_given = false;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = detail::trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected 'key = value'");
    const std::string key = detail::trim(stripped.substr(0, eq));
    const std::string value = detail::trim(stripped.substr(eq + 1));
    if (key == "n") {
      cfg.n = static_cast<std::size_t>(detail::parse_config_u64(key, value, line_no));
    } else if (key == "field_w") {
      cfg.field_w = detail::parse_config_double(key, value, line_no);
    } else if (key == "field_h") {
      cfg.field_h = detail::parse_config_double(key, value, line_no);
    } else if (key == "radio_range") {
      cfg.radio_range = detail::parse_config_double(key, value, line_no);
    } else if (key == "seed") {
      cfg.seed = detail::parse_config_u64(key, value, line_no);
    } else if (key == "anchors_k") {
      cfg.anchors_k = static_cast<std::size_t>(detail::parse_config_u64(key, value, line_no));
    } else if (key == "anchor_strategy") {
      try {
        cfg.anchor_strategy = parse_anchor_strategy(value);
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": invalid anchor_strategy '" + value + "'");
      }
    } else if (key == "metric") {
      MetricKind m;
      try {
        m = parse_metric(value);
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": invalid metric '" + value + "'");
      }
      if (m == MetricKind::kGeoEuclidean)
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": metric must be a VC metric (vc-ed, vc-md, vc-smd)");
      cfg.metric = m;
    } else if (key == "loc_error") {
      cfg.loc_error = detail::parse_config_double(key, value, line_no);
    } else if (key == "protocols") {
      cfg.protocols.clear();
      for (const std::string& name : detail::split(value, ',')) {
        try {
          cfg.protocols.push_back(parse_protocol(name));
        } catch (const std::invalid_argument&) {
          throw std::runtime_error("config line " + std::to_string(line_no) +
                                   ": invalid entry '" + name + "' in protocols");
        }
      }
      protocols_given = true;
    } else if (key == "pairs") {
      if (value == "all") {
        cfg.pairs.kind = PairSpec::Kind::kAll;
      } else if (value.find('>') != std::string::npos) {
        cfg.pairs.kind = PairSpec::Kind::kExplicit;
        for (const std::string& item : detail::split(value, ',')) {
          const auto gt = item.find('>');
          if (gt == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": pairs entries must be 'src>dst'");
          const auto src = detail::parse_config_u64("pairs", detail::trim(item.substr(0, gt)),
                                                    line_no);
          const auto dst = detail::parse_config_u64("pairs", detail::trim(item.substr(gt + 1)),
                                                    line_no);
          cfg.pairs.explicit_pairs.emplace_back(static_cast<NodeId>(src),
                                                static_cast<NodeId>(dst));
        }
      } else {
        cfg.pairs.kind = PairSpec::Kind::kRandom;
        cfg.pairs.count =
            static_cast<std::size_t>(detail::parse_config_u64(key, value, line_no));
      }
    } else if (key == "ttl_mult") {
      cfg.ttl_mult = static_cast<int>(detail::parse_config_u64(key, value, line_no));
    } else if (key == "node_file") {
      cfg.node_file = value;
    } else {
      throw std::runtime_error("config line " + std::to_string(line_no) + ": unknown key '" +
                               key + "'");
    }
  }

  if (cfg.node_file.empty()) {
    if (cfg.n < 2) throw std::runtime_error("config validation: n must be >= 2");
    if (cfg.field_w <= 0 || cfg.field_h <= 0)
      throw std::runtime_error("config validation: field_w and field_h must be positive");
    if (cfg.radio_range <= 0)
      throw std::runtime_error("config validation: radio_range must be positive");
  }
  if (cfg.anchors_k < 1) throw std::runtime_error("config validation: anchors_k must be >= 1");
  if (cfg.loc_error < 0) throw std::runtime_error("config validation: loc_error must be >= 0");
  if (cfg.ttl_mult < 1) throw std::runtime_error("config validation: ttl_mult must be >= 1");
  if (cfg.protocols.empty() && protocols_given)
    throw std::runtime_error("config validation: protocols must not be empty");
  if (cfg.pairs.kind == PairSpec::Kind::kRandom && cfg.pairs.count == 0)
    throw std::runtime_error("config validation: pairs count must be >= 1");
  return cfg;
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_config: cannot open '" + path + "'");
  return parse_config(in);
}

// Everything derived from one connected deployment: graph, planar view,
// coordinates, and the pair set all protocols share.
struct BuiltScenario {
  Deployment deployment;
  Graph graph;
  PlanarGraph planar;
  AnchorSet anchors;
  VcTable vc;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  int retries = 0;
  std::uint64_t effective_seed = 0;
  int ttl = 0;
};

inline BuiltScenario build_scenario(const ScenarioConfig& cfg) {
  BuiltScenario s;
  if (!cfg.node_file.empty()) {
    std::ifstream in(cfg.node_file);
    if (!in)
      throw std::runtime_error("build_scenario: cannot open node_file '" + cfg.node_file + "'");
    s.deployment = load_deployment(in);
    s.graph = build_graph(s.deployment);
    if (!is_connected(s.graph))
      throw std::runtime_error("build_scenario: node_file deployment is not connected");
    s.effective_seed = s.deployment.seed;
  } else {
    const std::uint64_t base = splitmix64(cfg.seed);
    bool connected = false;
    for (int attempt = 0; attempt <= kMaxConnectivityRetries; ++attempt) {
      s.effective_seed = base + static_cast<std::uint64_t>(attempt);
      s.deployment = generate_deployment(cfg.n, cfg.field_w, cfg.field_h, cfg.radio_range,
                                         s.effective_seed);
      s.graph = build_graph(s.deployment);
      if (is_connected(s.graph)) {
        connected = true;
        s.retries = attempt;
        break;
      }
    }
    if (!connected)
      throw std::runtime_error("build_scenario: no connected deployment within " +
                               std::to_string(kMaxConnectivityRetries) +
                               " retries (seed " + std::to_string(cfg.seed) + ")");
  }

  if (cfg.loc_error > 0.0)
    s.deployment = inject_localization_error(
        s.deployment, cfg.loc_error, splitmix64(s.effective_seed ^ detail::kErrorSeedTag));

  const std::size_t n = s.graph.size();
  if (cfg.anchors_k > n)
    throw std::runtime_error("build_scenario: anchors_k exceeds node count");
  s.anchors = select_anchors(s.graph, s.deployment, cfg.anchors_k, cfg.anchor_strategy);
  s.vc = assign_coordinates(s.graph, s.anchors);
  s.planar = planarize_gabriel(s.graph, s.deployment.perceived_positions());
  s.ttl = cfg.ttl_mult * static_cast<int>(n);

  switch (cfg.pairs.kind) {
    case PairSpec::Kind::kExplicit:
      for (auto [src, dst] : cfg.pairs.explicit_pairs) {
        if (src >= n || dst >= n)
          throw std::runtime_error("build_scenario: pair id out of range");
        if (src == dst) throw std::runtime_error("build_scenario: pair src == dst");
      }
      s.pairs = cfg.pairs.explicit_pairs;
      break;
    case PairSpec::Kind::kAll:
      for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
          if (u != v) s.pairs.emplace_back(u, v);
      break;
    case PairSpec::Kind::kAuto:
    case PairSpec::Kind::kRandom: {
      std::size_t m = cfg.pairs.count;
      if (cfg.pairs.kind == PairSpec::Kind::kAuto) {
        if (n > 100) {
          m = 500;
        } else {
          for (NodeId u = 0; u < n; ++u)
            for (NodeId v = 0; v < n; ++v)
              if (u != v) s.pairs.emplace_back(u, v);
          break;
        }
      }
      SeededRng rng(splitmix64(s.effective_seed ^ detail::kPairSeedTag));
      for (std::size_t i = 0; i < m; ++i) {
        const auto src = static_cast<NodeId>(rng.next_below(n));
        NodeId dst = src;
        while (dst == src) dst = static_cast<NodeId>(rng.next_below(n));
        s.pairs.emplace_back(src, dst);
      }
      break;
    }
  }
  return s;
}

struct SummaryRow {
  ProtocolKind protocol = ProtocolKind::kSp;
  std::size_t pair_count = 0;
  std::size_t delivered = 0;
  double delivery_ratio = 0.0;
  std::optional<double> mean_stretch;  // over delivered packets only
  std::optional<double> p95_stretch;   // nearest-rank percentile
  std::optional<double> mean_hops;     // over delivered packets only
  std::array<double, kModeCount> mode_usage{};  // fraction of all forwards
  bool vc_applies = false;
  long long stalls = 0;           // under the protocol's operative metric
  long long minima_all = 0;       // metric-independent local minima
};

struct PacketRecord {
  ProtocolKind protocol;
  NodeId src;
  NodeId dst;
  RouteOutcome outcome;
};

struct ExperimentResult {
  ScenarioConfig cfg;
  std::uint64_t base_seed = 0;
  std::uint64_t effective_seed = 0;
  int retries = 0;
  std::size_t n_nodes = 0;
  double mean_degree = 0.0;
  std::vector<PacketRecord> packets;  // protocol-major, pair order within
  std::vector<SummaryRow> summary;    // one row per configured protocol
  AnomalyReport anomaly;
};

namespace detail {

inline bool protocol_uses_vc(ProtocolKind p) {
  return p == ProtocolKind::kVcap || p == ProtocolKind::kLcr || p == ProtocolKind::kBvr ||
         p == ProtocolKind::kHgr;
}

// The distance measure each protocol's greedy phase actually ranks by.
inline MetricKind operative_metric(ProtocolKind p, const ScenarioConfig& cfg) {
  if (p == ProtocolKind::kBvr) return MetricKind::kVcSemiManhattan;
  if (p == ProtocolKind::kHgr) return MetricKind::kVcEuclidean;
  return cfg.metric;
}

inline SummaryRow summarize(ProtocolKind p, std::span<const RouteOutcome> outcomes) {
  SummaryRow row;
  row.protocol = p;
  row.pair_count = outcomes.size();
  std::vector<double> stretches;
  double hop_sum = 0.0;
  long long forwards = 0;
  std::array<long long, kModeCount> per_mode{};
  for (const RouteOutcome& o : outcomes) {
    forwards += o.total_forwards;
    for (int m = 0; m < kModeCount; ++m) per_mode[m] += o.mode_forwards[m];
    if (!o.delivered) continue;
    ++row.delivered;
    hop_sum += o.hops;
    if (o.optimal_hops >= 1) stretches.push_back(static_cast<double>(o.hops) / o.optimal_hops);
  }
  if (!outcomes.empty())
    row.delivery_ratio = static_cast<double>(row.delivered) / outcomes.size();
  if (row.delivered > 0) row.mean_hops = hop_sum / static_cast<double>(row.delivered);
  if (!stretches.empty()) {
    double sum = 0.0;
    for (double v : stretches) sum += v;
    row.mean_stretch = sum / static_cast<double>(stretches.size());
    std::sort(stretches.begin(), stretches.end());
    const auto rank = static_cast<std::size_t>(
        std::ceil(0.95 * static_cast<double>(stretches.size())));
    row.p95_stretch = stretches[rank == 0 ? 0 : rank - 1];
  }
  if (forwards > 0)
    for (int m = 0; m < kModeCount; ++m)
      row.mode_usage[m] = static_cast<double>(per_mode[m]) / static_cast<double>(forwards);
  return row;
}

}  // namespace detail

// Builds the scenario once, routes the shared pair set under every configured
// protocol, and aggregates per-protocol statistics plus the anomaly census.
inline ExperimentResult run_experiment(const ScenarioConfig& cfg) {
  ExperimentResult res;
  res.cfg = cfg;
  res.base_seed = cfg.seed;
  BuiltScenario s = build_scenario(cfg);
  res.effective_seed = s.effective_seed;
  res.retries = s.retries;
  res.n_nodes = s.graph.size();
  res.mean_degree = s.graph.mean_degree();

  const auto positions = s.deployment.perceived_positions();
  RouteViews views;
  views.graph = &s.graph;
  views.planar = &s.planar;
  views.views = MetricViews{{positions.data(), positions.size()}, &s.vc};
  views.vc_metric = cfg.metric;

  res.anomaly = build_report(s.graph, s.deployment, s.vc);

  for (ProtocolKind p : cfg.protocols) {
    const auto outcomes = run_pairset(views, p, s.pairs, s.ttl);
    SummaryRow row = detail::summarize(p, outcomes);
    row.vc_applies = detail::protocol_uses_vc(p);
    if (row.vc_applies) {
      switch (detail::operative_metric(p, cfg)) {
        case MetricKind::kVcEuclidean: row.stalls = res.anomaly.stalls_vc_ed; break;
        case MetricKind::kVcManhattan: row.stalls = res.anomaly.stalls_vc_md; break;
        case MetricKind::kVcSemiManhattan: row.stalls = res.anomaly.stalls_vc_smd; break;
        case MetricKind::kGeoEuclidean: break;
      }
      row.minima_all = res.anomaly.minima_all_metrics;
    }
    res.summary.push_back(row);
    for (std::size_t i = 0; i < s.pairs.size(); ++i)
      res.packets.push_back(PacketRecord{p, s.pairs[i].first, s.pairs[i].second, outcomes[i]});
  }
  return res;
}

// ---------------------------------------------------------------------------
// CSV and metadata emission
// ---------------------------------------------------------------------------

inline constexpr const char* kPacketsCsvHeader =
    "seed,protocol,src,dst,delivered,hops,optimal,drop_reason,modes";

namespace detail {

inline std::string modes_cell(const RouteOutcome& o) {
  std::string cell;
  for (std::size_t i = 0; i < o.mode_transitions.size(); ++i) {
    if (i > 0) cell += ';';
    cell += mode_name(o.mode_transitions[i].second);
    cell += '@';
    cell += std::to_string(o.mode_transitions[i].first);
  }
  return cell;
}

inline void append_packet_rows(std::string& out, const ExperimentResult& r,
                               const std::string& prefix) {
  for (const PacketRecord& p : r.packets) {
    out += prefix;
    out += std::to_string(r.base_seed);
    out += ',';
    out += protocol_name(p.protocol);
    out += ',';
    out += std::to_string(p.src);
    out += ',';
    out += std::to_string(p.dst);
    out += ',';
    out += p.outcome.delivered ? '1' : '0';
    out += ',';
    out += std::to_string(p.outcome.hops);
    out += ',';
    out += std::to_string(p.outcome.optimal_hops);
    out += ',';
    if (p.outcome.drop_reason) out += drop_reason_name(*p.outcome.drop_reason);
    out += ',';
    out += modes_cell(p.outcome);
    out += '\n';
  }
}

inline constexpr const char* kSummaryColumns =
    "seed,protocol,n,radio_range,anchors_k,loc_error,pairs,mean_degree,retries,"
    "delivery_ratio,mean_stretch,p95_stretch,mean_hops,mu_greedy_geo,mu_face,mu_vc_greedy,"
    "mu_vc_backtrack,mu_recorded_backtrack,mu_anchor_fallback,stalls,minima_all";

inline void append_summary_rows(std::string& out, const ExperimentResult& r,
                                const std::string& prefix) {
  for (const SummaryRow& row : r.summary) {
    out += prefix;
    out += std::to_string(r.base_seed);
    out += ',';
    out += protocol_name(row.protocol);
    out += ',';
    out += std::to_string(r.n_nodes);
    out += ',';
    out += format_g6(r.cfg.radio_range);
    out += ',';
    out += std::to_string(r.cfg.anchors_k);
    out += ',';
    out += format_g6(r.cfg.loc_error);
    out += ',';
    out += std::to_string(row.pair_count);
    out += ',';
    out += format_g6(r.mean_degree);
    out += ',';
    out += std::to_string(r.retries);
    out += ',';
    out += format_g6(row.delivery_ratio);
    out += ',';
    if (row.mean_stretch) out += format_g6(*row.mean_stretch);
    out += ',';
    if (row.p95_stretch) out += format_g6(*row.p95_stretch);
    out += ',';
    if (row.mean_hops) out += format_g6(*row.mean_hops);
    for (int m = 0; m < kModeCount; ++m) {
      out += ',';
      out += format_g6(row.mode_usage[m]);
    }
    out += ',';
    if (row.vc_applies) out += std::to_string(row.stalls);
    out += ',';
    if (row.vc_applies) out += std::to_string(row.minima_all);
    out += '\n';
  }
}

}  // namespace detail

inline void write_packets_csv(std::ostream& os, std::span<const ExperimentResult> results) {
  std::string out(kPacketsCsvHeader);
  out += '\n';
  for (const ExperimentResult& r : results) detail::append_packet_rows(out, r, "");
  os << out;
}

inline void write_summary_csv(std::ostream& os, std::span<const ExperimentResult> results) {
  std::string out(detail::kSummaryColumns);
  out += '\n';
  for (const ExperimentResult& r : results) detail::append_summary_rows(out, r, "");
  os << out;
}

inline void write_anomaly_csv(std::ostream& os, std::span<const ExperimentResult> results) {
  std::string out = "seed,";
  out += report_csv_header();
  out += '\n';
  for (const ExperimentResult& r : results) {
    out += std::to_string(r.base_seed);
    out += ',';
    out += report_csv_row(r.anomaly);
    out += '\n';
  }
  os << out;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

enum class SweepAxis { kDensity, kError, kAnchors };

inline SweepAxis parse_sweep_axis(const std::string& s) {
  if (s == "density") return SweepAxis::kDensity;
  if (s == "error") return SweepAxis::kError;
  if (s == "anchors") return SweepAxis::kAnchors;
  throw std::invalid_argument("unknown sweep axis '" + s + "' (density, error, anchors)");
}

inline const char* sweep_axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::kDensity: return "density";
    case SweepAxis::kError: return "error";
    case SweepAxis::kAnchors: return "anchors";
  }
  return "?";
}

struct SweepCell {
  double value = 0.0;
  ExperimentResult result;
};

// One experiment per (axis value, seed); seeds iterate fastest within a value.
inline std::vector<SweepCell> sweep(const ScenarioConfig& base, SweepAxis axis,
                                    std::span<const double> values, int seed_count = 1) {
  if (seed_count < 1) throw std::invalid_argument("sweep: seed_count must be >= 1");
  std::vector<SweepCell> cells;
  for (double value : values) {
    for (int i = 0; i < seed_count; ++i) {
      ScenarioConfig cfg = base;
      cfg.seed = base.seed + static_cast<std::uint64_t>(i);
      switch (axis) {
        case SweepAxis::kDensity:
          if (value <= 0) throw std::invalid_argument("sweep: density value must be positive");
          cfg.radio_range = value;
          break;
        case SweepAxis::kError:
          if (value < 0) throw std::invalid_argument("sweep: error value must be >= 0");
          cfg.loc_error = value;
          break;
        case SweepAxis::kAnchors: {
          if (value < 1 || value != std::floor(value))
            throw std::invalid_argument("sweep: anchors value must be a positive integer");
          cfg.anchors_k = static_cast<std::size_t>(value);
          break;
        }
      }
      cells.push_back(SweepCell{value, run_experiment(cfg)});
    }
  }
  return cells;
}

inline void write_sweep_summary_csv(std::ostream& os, SweepAxis axis,
                                    std::span<const SweepCell> cells) {
  std::string out = "axis,value,";
  out += detail::kSummaryColumns;
  out += '\n';
  for (const SweepCell& c : cells) {
    std::string prefix = sweep_axis_name(axis);
    prefix += ',';
    prefix += detail::format_g6(c.value);
    prefix += ',';
    detail::append_summary_rows(out, c.result, prefix);
  }
  os << out;
}

inline void write_sweep_packets_csv(std::ostream& os, SweepAxis axis,
                                    std::span<const SweepCell> cells) {
  std::string out = "axis,value,";
  out += kPacketsCsvHeader;
  out += '\n';
  for (const SweepCell& c : cells) {
    std::string prefix = sweep_axis_name(axis);
    prefix += ',';
    prefix += detail::format_g6(c.value);
    prefix += ',';
    detail::append_packet_rows(out, c.result, prefix);
  }
  os << out;
}

inline void write_sweep_anomaly_csv(std::ostream& os, SweepAxis axis,
                                    std::span<const SweepCell> cells) {
  std::string out = "axis,value,seed,";
  out += report_csv_header();
  out += '\n';
  for (const SweepCell& c : cells) {
    out += sweep_axis_name(axis);
    out += ',';
    out += detail::format_g6(c.value);
    out += ',';
    out += std::to_string(c.result.base_seed);
    out += ',';
    out += report_csv_row(c.result.anomaly);
    out += '\n';
  }
  os << out;
}

inline void write_meta(std::ostream& os, const std::string& command,
                       const ScenarioConfig& cfg, std::span<const ExperimentResult> results) {
  os << "prng = " << kPrngName << '\n'
     << "command = " << command << '\n'
     << "cfg.n = " << cfg.n << '\n'
     << "cfg.field_w = " << detail::format_g6(cfg.field_w) << '\n'
     << "cfg.field_h = " << detail::format_g6(cfg.field_h) << '\n'
     << "cfg.radio_range = " << detail::format_g6(cfg.radio_range) << '\n'
     << "cfg.seed = " << cfg.seed << '\n'
     << "cfg.anchors_k = " << cfg.anchors_k << '\n'
     << "cfg.anchor_strategy = " << anchor_strategy_name(cfg.anchor_strategy) << '\n'
     << "cfg.metric = " << metric_name(cfg.metric) << '\n'
     << "cfg.loc_error = " << detail::format_g6(cfg.loc_error) << '\n'
     << "cfg.ttl_mult = " << cfg.ttl_mult << '\n'
     << "cfg.node_file = " << cfg.node_file << '\n';
  os << "cfg.protocols =";
  for (ProtocolKind p : cfg.protocols) os << ' ' << protocol_name(p);
  os << '\n';
  switch (cfg.pairs.kind) {
    case PairSpec::Kind::kAuto: os << "cfg.pairs = auto\n"; break;
    case PairSpec::Kind::kAll: os << "cfg.pairs = all\n"; break;
    case PairSpec::Kind::kRandom: os << "cfg.pairs = " << cfg.pairs.count << "\n"; break;
    case PairSpec::Kind::kExplicit:
      os << "cfg.pairs = " << cfg.pairs.explicit_pairs.size() << " explicit\n";
      break;
  }
  for (const ExperimentResult& r : results)
    os << "seed " << r.base_seed << ": effective_seed = " << r.effective_seed
       << ", retries = " << r.retries << ", mean_degree = " << detail::format_g6(r.mean_degree)
       << '\n';
}

}  // namespace vcgr

#endif  // VCGR_HARNESS_HPP_
