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

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcgr/vcgr.hpp"

namespace {

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  return out;
}

std::vector<vcgr::ExperimentResult> run_seeds(const vcgr::ScenarioConfig& base, int seeds) {
  std::vector<vcgr::ExperimentResult> results;
  for (int i = 0; i < seeds; ++i) {
    vcgr::ScenarioConfig cfg = base;
    cfg.seed = base.seed + static_cast<std::uint64_t>(i);
    results.push_back(vcgr::run_experiment(cfg));
  }
  return results;
}

// Anomaly-only pass: builds each scenario and censuses it without routing.
std::vector<vcgr::ExperimentResult> census_seeds(const vcgr::ScenarioConfig& base, int seeds) {
  std::vector<vcgr::ExperimentResult> results;
  for (int i = 0; i < seeds; ++i) {
    vcgr::ScenarioConfig cfg = base;
    cfg.seed = base.seed + static_cast<std::uint64_t>(i);
    vcgr::BuiltScenario s = vcgr::build_scenario(cfg);
    vcgr::ExperimentResult r;
    r.cfg = cfg;
    r.base_seed = cfg.seed;
    r.effective_seed = s.effective_seed;
    r.retries = s.retries;
    r.n_nodes = s.graph.size();
    r.mean_degree = s.graph.mean_degree();
    r.anomaly = vcgr::build_report(s.graph, s.deployment, s.vc);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic simulator for geographic and virtual-coordinate routing"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  int seeds = 1;
  std::string axis_name;
  std::string values_csv;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "Scenario config file")->required();
    cmd->add_option("--out", out_dir, "Output directory (created if missing)");
    cmd->add_option("--seeds", seeds, "Number of consecutive base seeds")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Route the pair set under each protocol");
  add_common(run_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Repeat the experiment along one axis");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--axis", axis_name, "density | error | anchors")->required();
  sweep_cmd->add_option("--values", values_csv, "Comma-separated axis values")->required();

  CLI::App* anomaly_cmd =
      app.add_subcommand("anomaly", "Census coordinate anomalies without routing");
  add_common(anomaly_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    const vcgr::ScenarioConfig cfg = vcgr::load_config(config_path);
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    if (run_cmd->parsed()) {
      const auto results = run_seeds(cfg, seeds);
      {
        auto f = open_output(dir, "packets.csv");
        vcgr::write_packets_csv(f, results);
      }
      {
        auto f = open_output(dir, "summary.csv");
        vcgr::write_summary_csv(f, results);
      }
      {
        auto f = open_output(dir, "anomaly.csv");
        vcgr::write_anomaly_csv(f, results);
      }
      auto f = open_output(dir, "meta.txt");
      vcgr::write_meta(f, "run", cfg, results);
    } else if (sweep_cmd->parsed()) {
      const vcgr::SweepAxis axis = vcgr::parse_sweep_axis(axis_name);
      std::vector<double> values;
      for (const std::string& tok : vcgr::detail::split(values_csv, ','))
        if (!tok.empty()) values.push_back(std::stod(tok));
      const auto cells = vcgr::sweep(cfg, axis, values, seeds);
      {
        auto f = open_output(dir, "packets.csv");
        vcgr::write_sweep_packets_csv(f, axis, cells);
      }
      {
        auto f = open_output(dir, "summary.csv");
        vcgr::write_sweep_summary_csv(f, axis, cells);
      }
      {
        auto f = open_output(dir, "anomaly.csv");
        vcgr::write_sweep_anomaly_csv(f, axis, cells);
      }
      std::vector<vcgr::ExperimentResult> flat;
      flat.reserve(cells.size());
      for (const auto& c : cells) flat.push_back(c.result);
      auto f = open_output(dir, "meta.txt");
      vcgr::write_meta(f, "sweep " + axis_name + " " + values_csv, cfg, flat);
    } else {
      const auto results = census_seeds(cfg, seeds);
      {
        auto f = open_output(dir, "anomaly.csv");
        vcgr::write_anomaly_csv(f, results);
      }
      auto f = open_output(dir, "meta.txt");
      vcgr::write_meta(f, "anomaly", cfg, results);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
