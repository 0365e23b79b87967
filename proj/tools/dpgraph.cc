// Copyright 2026 The dpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dpgraph command-line tool.
//
//   dpgraph generate --config run.json [--seed N] [--output-dir DIR] ...
//   dpgraph simulate --config run.json ...
//   dpgraph bounds   --config run.json --source 0 --target 10 ...
//   dpgraph sweep    --config sweep.json ...
//
// Flags override the corresponding config fields. Exit codes: 0 success,
// 2 validation error, 3 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpgraph/cli.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct Overrides {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<std::string> output_dir;
  std::optional<int64_t> trials;
  std::optional<int64_t> threads;
  std::optional<double> noise_pct;
  std::optional<double> sigma;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<double> delta_f;
  std::optional<std::string> graph_class;
  std::optional<int> n;
  std::optional<double> r;
  std::optional<double> gamma;
  std::optional<double> sparsity;
  std::optional<std::string> graph_file;
  std::optional<int64_t> per_category;
  std::optional<bool> write_records;
  std::optional<uint32_t> source;
  std::optional<uint32_t> target;
};

void AddCommonOptions(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config_path, "JSON run configuration");
  cmd->add_option("--seed", o.seed, "master seed (controls all randomness)");
  cmd->add_option("-o,--output-dir", o.output_dir, "directory for all output files");
  cmd->add_option("--class", o.graph_class, "graph class: grid, wheel or scale_free");
  cmd->add_option("--n", o.n, "graph size parameter");
  cmd->add_option("--r", o.r, "wheel spoke/rim weight ratio");
  cmd->add_option("--gamma", o.gamma, "scale-free power-law exponent");
  cmd->add_option("--sparsity", o.sparsity, "fraction of zero-weight edges");
  cmd->add_option("--graph-file", o.graph_file, "read the ground truth from a graph file");
  cmd->add_option("--noise-pct", o.noise_pct, "noise sd as % of mean edge weight");
  cmd->add_option("--sigma", o.sigma, "noise sd");
  cmd->add_option("--epsilon", o.epsilon, "privacy epsilon");
  cmd->add_option("--delta", o.delta, "privacy delta");
  cmd->add_option("--delta-f", o.delta_f, "edge-weight sensitivity");
}

nlohmann::json LoadConfig(const Overrides& o) {
  nlohmann::json j = nlohmann::json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw dpgraph::ConfigError("cannot read config file " + o.config_path);
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw dpgraph::ConfigError("config file " + o.config_path + ": " + e.what());
    }
  }
  if (o.seed) j["seed"] = *o.seed;
  if (o.output_dir) j["output_dir"] = *o.output_dir;
  if (o.trials) j["trials"] = *o.trials;
  if (o.threads) j["threads"] = *o.threads;
  if (o.write_records) j["write_records"] = *o.write_records;
  if (o.per_category) j["pair_sampling"] = {{"per_category", *o.per_category}};

  if (o.graph_file) {
    j.erase("graph");
    j["graph_file"] = *o.graph_file;
  }
  if (o.graph_class || o.n || o.r || o.gamma || o.sparsity) {
    nlohmann::json& g = j["graph"];
    if (g.is_null()) g = nlohmann::json::object();
    if (o.graph_class && g.value("class", "") != *o.graph_class) {
      g.erase("r");
      g.erase("gamma");
      g["class"] = *o.graph_class;
    }
    if (o.n) g["n"] = *o.n;
    if (o.r) g["r"] = *o.r;
    if (o.gamma) g["gamma"] = *o.gamma;
    if (o.sparsity) g["sparsity"] = *o.sparsity;
  }

  if (o.noise_pct) j["privacy"] = {{"noise_pct", *o.noise_pct}};
  if (o.sigma) j["privacy"] = {{"sigma", *o.sigma}};
  if (o.epsilon || o.delta || o.delta_f) {
    nlohmann::json p = j.contains("privacy") && j["privacy"].contains("epsilon")
                           ? j["privacy"]
                           : nlohmann::json::object();
    if (o.epsilon) p["epsilon"] = *o.epsilon;
    if (o.delta) p["delta"] = *o.delta;
    if (o.delta_f) p["delta_f"] = *o.delta_f;
    j["privacy"] = p;
  }

  if (o.source || o.target) {
    nlohmann::json& b = j["bounds"];
    if (b.is_null()) b = nlohmann::json::object();
    if (o.source) b["source"] = *o.source;
    if (o.target) b["target"] = *o.target;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian edge-weight release and shortest-path bias simulator"};
  app.require_subcommand(1);
  Overrides o;

  auto* generate = app.add_subcommand("generate", "write a ground-truth graph file");
  auto* simulate = app.add_subcommand("simulate", "run the Monte-Carlo bias experiment");
  auto* bounds = app.add_subcommand("bounds", "tabulate q_beta bounds for one node pair");
  auto* sweep = app.add_subcommand("sweep", "run simulate over a parameter grid");
  for (CLI::App* cmd : {generate, simulate, bounds, sweep}) AddCommonOptions(cmd, o);
  for (CLI::App* cmd : {simulate, sweep}) {
    cmd->add_option("--trials", o.trials, "number of private releases");
    cmd->add_option("--threads", o.threads, "worker threads (results do not depend on it)");
    cmd->add_option("--per-category", o.per_category, "sample this many pairs per category");
    cmd->add_option("--write-records", o.write_records, "write the per-record CSV");
  }
  bounds->add_option("--source", o.source, "source node");
  bounds->add_option("--target", o.target, "target node");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const dpgraph::RunConfig cfg = dpgraph::ParseRunConfig(LoadConfig(o));
    if (generate->parsed()) {
      const auto out = dpgraph::CmdGenerate(cfg);
      std::cout << "wrote " << out.graph_file.string() << "\n";
    } else if (simulate->parsed()) {
      const auto out = dpgraph::CmdSimulate(cfg);
      std::cout << "sigma " << dpgraph::FormatDouble(out.result.privacy.sigma) << "\n";
      if (!out.records.empty()) std::cout << "wrote " << out.records.string() << "\n";
      std::cout << "wrote " << out.aggregate.string() << "\n"
                << "wrote " << out.pairs.string() << "\n"
                << "wrote " << out.trend.string() << "\n";
    } else if (bounds->parsed()) {
      const auto out = dpgraph::CmdBounds(cfg);
      std::cout << "wrote " << out.table.string() << "\n";
    } else if (sweep->parsed()) {
      const auto runs = dpgraph::CmdSweep(cfg);
      std::cout << "completed " << runs.size() << " runs\n";
    }
  } catch (const dpgraph::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
