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

#ifndef DPGRAPH_CLI_H_
#define DPGRAPH_CLI_H_

// Run configuration and the generate / simulate / bounds / sweep commands.
//
// A run is described by one JSON object:
//
//   {
//     "graph": {"class": "grid", "n": 10, "sparsity": 0.0,
//               "weight_seed": 1, "topology_seed": 2},   // or "graph_file"
//     "privacy": {"noise_pct": 20},      // or {"sigma": 0.3}
//                                        // or {"epsilon": 1, "delta": 0.01, "delta_f": 1}
//     "trials": 100,
//     "seed": 42,
//     "pair_sampling": "all",            // or {"per_category": 500}
//     "threads": 1,
//     "output_dir": "out",
//     "write_records": true,
//     "bounds": {"source": 0, "target": 10, "betas": [...],
//                "beta_grid": {"start": 0.01, "stop": 3, "count": 50},
//                "gamma_confidence": 0.05, "max_paths": 10000, "max_hops": 64},
//     "sweep": {"noise_pct": [...], "n": [...], "r": [...], "gamma": [...],
//               "sparsity": [...]}
//   }
//
// Graph seeds default to streams derived from "seed". Every file written
// gets a "<file>.meta.json" sidecar with the resolved configuration.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dpgraph/analytics.h"
#include "dpgraph/errors.h"
#include "dpgraph/experiment.h"
#include "dpgraph/generators.h"
#include "dpgraph/graph.h"
#include "dpgraph/release.h"
#include "dpgraph/rng.h"

namespace dpgraph {

inline constexpr const char* kVersion = "1.0.0";

inline constexpr const char* kBoundsCsvHeader =
    "beta,sum_bound,coarse_bound,exact,corollary_bound,sigma,ensemble_size,s_max";

struct BoundsConfig {
  NodeId source = 0;
  NodeId target = 1;
  std::vector<double> betas;
  double gamma_confidence = 0.05;
  PathLimits limits;
};

struct SweepConfig {
  std::vector<double> noise_pct;
  std::vector<int> n;
  std::vector<double> r;
  std::vector<double> gamma;
  std::vector<double> sparsity;
};

struct RunConfig {
  std::optional<GraphSpec> graph;
  std::optional<std::string> graph_file;
  std::optional<NoiseSpec> noise;
  uint32_t trials = 100;
  uint64_t seed = 0;
  PairSampling sampling;
  unsigned threads = 1;
  std::string output_dir = ".";
  bool write_records = true;
  std::optional<BoundsConfig> bounds;
  std::optional<SweepConfig> sweep;
};

namespace internal {

using nlohmann::json;

inline void RejectUnknownKeys(const json& object, const std::set<std::string>& allowed,
                              const std::string& where) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError(where + ": unknown field '" + it.key() + "'");
    }
  }
}

template <typename T>
T Get(const json& object, const std::string& key, const std::string& where) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + ": missing or wrong type");
  }
}

inline uint64_t GetSeed(const json& object, const std::string& key, const std::string& where) {
  const json& v = object.at(key);
  if (v.is_number_unsigned()) return v.get<uint64_t>();
  if (v.is_number_integer() && v.get<int64_t>() >= 0) return static_cast<uint64_t>(v.get<int64_t>());
  throw ConfigError(where + "." + key + ": must be a non-negative integer");
}

inline GraphSpec ParseGraphSpec(const json& j, uint64_t master_seed) {
  if (!j.is_object()) throw ConfigError("graph: must be an object");
  RejectUnknownKeys(j, {"class", "n", "r", "gamma", "sparsity", "weight_seed", "topology_seed"},
                    "graph");
  GraphSpec spec;
  spec.graph_class = ParseGraphClass(Get<std::string>(j, "class", "graph"));
  spec.n = Get<int>(j, "n", "graph");
  if (j.contains("r")) spec.r = Get<double>(j, "r", "graph");
  if (j.contains("gamma")) spec.gamma = Get<double>(j, "gamma", "graph");
  if (j.contains("sparsity")) spec.sparsity = Get<double>(j, "sparsity", "graph");
  spec.weight_seed = j.contains("weight_seed") ? GetSeed(j, "weight_seed", "graph")
                                               : DeriveSeed(master_seed, stream::kWeights);
  spec.topology_seed = j.contains("topology_seed")
                           ? GetSeed(j, "topology_seed", "graph")
                           : DeriveSeed(master_seed, stream::kTopology);
  spec.Validate();
  return spec;
}

inline NoiseSpec ParseNoise(const json& j) {
  if (!j.is_object()) throw ConfigError("privacy: must be an object");
  const bool budget = j.contains("epsilon") || j.contains("delta") || j.contains("delta_f");
  const int forms = int{budget} + int{j.contains("noise_pct")} + int{j.contains("sigma")};
  if (forms != 1) {
    throw ConfigError(
        "privacy: give exactly one of {epsilon, delta, delta_f}, {noise_pct} or {sigma}");
  }
  if (budget) {
    RejectUnknownKeys(j, {"epsilon", "delta", "delta_f"}, "privacy");
    BudgetNoise b{Get<double>(j, "epsilon", "privacy"), Get<double>(j, "delta", "privacy"),
                  Get<double>(j, "delta_f", "privacy")};
    SigmaFrom(b.epsilon, b.delta, b.delta_f);  // validates
    return b;
  }
  if (j.contains("noise_pct")) {
    RejectUnknownKeys(j, {"noise_pct"}, "privacy");
    const double pct = Get<double>(j, "noise_pct", "privacy");
    if (!(pct >= 0.0)) throw ConfigError("privacy.noise_pct: must be >= 0");
    return PercentNoise{pct};
  }
  RejectUnknownKeys(j, {"sigma"}, "privacy");
  const double sigma = Get<double>(j, "sigma", "privacy");
  if (!(sigma >= 0.0)) throw ConfigError("privacy.sigma: must be >= 0");
  return SigmaNoise{sigma};
}

inline BoundsConfig ParseBounds(const json& j) {
  if (!j.is_object()) throw ConfigError("bounds: must be an object");
  RejectUnknownKeys(j, {"source", "target", "betas", "beta_grid", "gamma_confidence",
                        "max_paths", "max_hops"},
                    "bounds");
  BoundsConfig b;
  b.source = Get<NodeId>(j, "source", "bounds");
  b.target = Get<NodeId>(j, "target", "bounds");
  if (j.contains("betas")) b.betas = Get<std::vector<double>>(j, "betas", "bounds");
  if (j.contains("beta_grid")) {
    const json& g = j.at("beta_grid");
    RejectUnknownKeys(g, {"start", "stop", "count"}, "bounds.beta_grid");
    const double start = Get<double>(g, "start", "bounds.beta_grid");
    const double stop = Get<double>(g, "stop", "bounds.beta_grid");
    const int count = Get<int>(g, "count", "bounds.beta_grid");
    if (count < 1) throw ConfigError("bounds.beta_grid.count: must be >= 1");
    for (int i = 0; i < count; ++i) {
      b.betas.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
    }
  }
  if (b.betas.empty()) throw ConfigError("bounds: give betas or beta_grid");
  for (double beta : b.betas) {
    if (!(beta > 0.0)) throw ConfigError("bounds.betas: every beta must be > 0");
  }
  if (j.contains("gamma_confidence")) {
    b.gamma_confidence = Get<double>(j, "gamma_confidence", "bounds");
    if (!(b.gamma_confidence > 0.0 && b.gamma_confidence < 1.0)) {
      throw ConfigError("bounds.gamma_confidence: must lie in (0,1)");
    }
  }
  if (j.contains("max_paths")) b.limits.max_paths = Get<size_t>(j, "max_paths", "bounds");
  if (j.contains("max_hops")) b.limits.max_hops = Get<size_t>(j, "max_hops", "bounds");
  return b;
}

inline SweepConfig ParseSweep(const json& j) {
  if (!j.is_object()) throw ConfigError("sweep: must be an object");
  RejectUnknownKeys(j, {"noise_pct", "n", "r", "gamma", "sparsity"}, "sweep");
  SweepConfig s;
  if (j.contains("noise_pct")) s.noise_pct = Get<std::vector<double>>(j, "noise_pct", "sweep");
  if (j.contains("n")) s.n = Get<std::vector<int>>(j, "n", "sweep");
  if (j.contains("r")) s.r = Get<std::vector<double>>(j, "r", "sweep");
  if (j.contains("gamma")) s.gamma = Get<std::vector<double>>(j, "gamma", "sweep");
  if (j.contains("sparsity")) s.sparsity = Get<std::vector<double>>(j, "sparsity", "sweep");
  return s;
}

}  // namespace internal

inline RunConfig ParseRunConfig(const nlohmann::json& j) {
  using internal::Get;
  if (!j.is_object()) throw ConfigError("config: must be a JSON object");
  internal::RejectUnknownKeys(j, {"graph", "graph_file", "privacy", "trials", "seed",
                                  "pair_sampling", "threads", "output_dir", "write_records",
                                  "bounds", "sweep"},
                              "config");
  RunConfig cfg;
  if (!j.contains("seed")) throw ConfigError("seed: required (pass --seed or set \"seed\")");
  cfg.seed = internal::GetSeed(j, "seed", "config");
  if (j.contains("graph") && j.contains("graph_file")) {
    throw ConfigError("config: give either graph or graph_file, not both");
  }
  if (j.contains("graph")) cfg.graph = internal::ParseGraphSpec(j.at("graph"), cfg.seed);
  if (j.contains("graph_file")) cfg.graph_file = Get<std::string>(j, "graph_file", "config");
  if (j.contains("privacy")) cfg.noise = internal::ParseNoise(j.at("privacy"));
  if (j.contains("trials")) {
    const int64_t trials = Get<int64_t>(j, "trials", "config");
    if (trials < 1) throw ConfigError("trials: must be >= 1");
    cfg.trials = static_cast<uint32_t>(trials);
  }
  if (j.contains("pair_sampling")) {
    const auto& ps = j.at("pair_sampling");
    if (ps.is_string() && ps.get<std::string>() == "all") {
      cfg.sampling.per_category.reset();
    } else if (ps.is_object()) {
      internal::RejectUnknownKeys(ps, {"per_category"}, "pair_sampling");
      const int64_t k = Get<int64_t>(ps, "per_category", "pair_sampling");
      if (k < 1) throw ConfigError("pair_sampling.per_category: must be >= 1");
      cfg.sampling.per_category = static_cast<size_t>(k);
    } else {
      throw ConfigError("pair_sampling: expected \"all\" or {\"per_category\": k}");
    }
  }
  if (j.contains("threads")) {
    const int64_t threads = Get<int64_t>(j, "threads", "config");
    if (threads < 1) throw ConfigError("threads: must be >= 1");
    cfg.threads = static_cast<unsigned>(threads);
  }
  if (j.contains("output_dir")) cfg.output_dir = Get<std::string>(j, "output_dir", "config");
  if (j.contains("write_records")) cfg.write_records = Get<bool>(j, "write_records", "config");
  if (j.contains("bounds")) cfg.bounds = internal::ParseBounds(j.at("bounds"));
  if (j.contains("sweep")) cfg.sweep = internal::ParseSweep(j.at("sweep"));
  return cfg;
}

inline nlohmann::json ToJson(const GraphSpec& spec) {
  nlohmann::json j = {{"class", ToString(spec.graph_class)},
                      {"n", spec.n},
                      {"sparsity", spec.sparsity},
                      {"weight_seed", spec.weight_seed},
                      {"topology_seed", spec.topology_seed}};
  if (spec.r) j["r"] = *spec.r;
  if (spec.gamma) j["gamma"] = *spec.gamma;
  return j;
}

inline nlohmann::json ToJson(const NoiseSpec& noise) {
  if (const auto* b = std::get_if<BudgetNoise>(&noise)) {
    return {{"epsilon", b->epsilon}, {"delta", b->delta}, {"delta_f", b->delta_f}};
  }
  if (const auto* p = std::get_if<PercentNoise>(&noise)) return {{"noise_pct", p->noise_pct}};
  return {{"sigma", std::get<SigmaNoise>(noise).sigma}};
}

// Canonical form of a parsed config: ParseRunConfig(ToJson(c)) == c.
inline nlohmann::json ToJson(const RunConfig& cfg) {
  nlohmann::json j;
  j["seed"] = cfg.seed;
  if (cfg.graph) j["graph"] = ToJson(*cfg.graph);
  if (cfg.graph_file) j["graph_file"] = *cfg.graph_file;
  if (cfg.noise) j["privacy"] = ToJson(*cfg.noise);
  j["trials"] = cfg.trials;
  if (cfg.sampling.per_category) {
    j["pair_sampling"] = {{"per_category", *cfg.sampling.per_category}};
  } else {
    j["pair_sampling"] = "all";
  }
  j["threads"] = cfg.threads;
  j["output_dir"] = cfg.output_dir;
  j["write_records"] = cfg.write_records;
  if (cfg.bounds) {
    nlohmann::json b = {{"source", cfg.bounds->source},
                        {"target", cfg.bounds->target},
                        {"betas", cfg.bounds->betas},
                        {"gamma_confidence", cfg.bounds->gamma_confidence},
                        {"max_paths", cfg.bounds->limits.max_paths}};
    if (cfg.bounds->limits.max_hops != PathLimits{}.max_hops) {
      b["max_hops"] = cfg.bounds->limits.max_hops;
    }
    j["bounds"] = b;
  }
  if (cfg.sweep) {
    nlohmann::json s = nlohmann::json::object();
    if (!cfg.sweep->noise_pct.empty()) s["noise_pct"] = cfg.sweep->noise_pct;
    if (!cfg.sweep->n.empty()) s["n"] = cfg.sweep->n;
    if (!cfg.sweep->r.empty()) s["r"] = cfg.sweep->r;
    if (!cfg.sweep->gamma.empty()) s["gamma"] = cfg.sweep->gamma;
    if (!cfg.sweep->sparsity.empty()) s["sparsity"] = cfg.sweep->sparsity;
    j["sweep"] = s;
  }
  return j;
}

// Writes via a temporary file and rename, so readers never see a partial file.
inline void WriteFileAtomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

inline std::filesystem::path PrepareOutputDir(const RunConfig& cfg) {
  const std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

// `file` plus its provenance sidecar.
inline void WriteWithSidecar(const std::filesystem::path& file, const std::string& contents,
                             const nlohmann::json& provenance) {
  WriteFileAtomic(file, contents);
  nlohmann::json meta = provenance;
  meta["file"] = file.filename().string();
  std::filesystem::path sidecar = file;
  sidecar += ".meta.json";
  WriteFileAtomic(sidecar, meta.dump(2) + "\n");
}

inline WeightedGraph LoadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read graph file " + path);
  return ReadGraphText(in);
}

inline WeightedGraph ResolveGraph(const RunConfig& cfg) {
  if (cfg.graph) return Generate(*cfg.graph);
  if (cfg.graph_file) return LoadGraphFile(*cfg.graph_file);
  throw ConfigError("graph: required (or graph_file)");
}

inline nlohmann::json Provenance(const RunConfig& cfg, const WeightedGraph& truth,
                                 std::optional<double> sigma) {
  nlohmann::json meta = {{"tool", "dpgraph"},
                         {"version", kVersion},
                         {"config", ToJson(cfg)},
                         {"normal_algorithm", std::string(kNormalAlgorithm)},
                         {"node_count", truth.node_count()},
                         {"edge_count", truth.edge_count()},
                         {"mean_edge_weight", truth.MeanWeight()}};
  if (sigma) meta["sigma"] = *sigma;
  return meta;
}

struct GenerateOutputs {
  std::filesystem::path graph_file;
};

inline GenerateOutputs CmdGenerate(const RunConfig& cfg) {
  if (!cfg.graph) throw ConfigError("graph: required for generate");
  const WeightedGraph g = Generate(*cfg.graph);
  const auto dir = PrepareOutputDir(cfg);
  std::ostringstream text;
  WriteGraphText(text, g);
  GenerateOutputs out{dir / "graph.txt"};
  WriteWithSidecar(out.graph_file, text.str(), Provenance(cfg, g, std::nullopt));
  return out;
}

struct SimulateOutputs {
  std::filesystem::path records;  // empty when records are not written
  std::filesystem::path aggregate;
  std::filesystem::path pairs;
  std::filesystem::path trend;
  ExperimentResult result;
};

inline nlohmann::json ToJson(const TrendReport& report) {
  nlohmann::json j;
  j["categories"] = nlohmann::json::array();
  for (const CategoryTrend& c : report.categories) {
    j["categories"].push_back({{"category", c.category},
                               {"p_unchanged", c.p_unchanged},
                               {"p_rel_bias_over_100", c.p_over_100},
                               {"mean_rel_bias", c.mean_rel_bias}});
  }
  j["deltas"] = nlohmann::json::array();
  for (const CategoryDelta& d : report.deltas) {
    j["deltas"].push_back({{"from", d.from},
                           {"to", d.to},
                           {"d_unchanged", d.d_unchanged},
                           {"d_rel_bias_over_100", d.d_over_100},
                           {"d_mean_rel_bias", d.d_mean_rel_bias}});
  }
  return j;
}

inline SimulateOutputs CmdSimulate(const RunConfig& cfg) {
  if (!cfg.noise) throw ConfigError("privacy: required for simulate");
  const WeightedGraph truth = ResolveGraph(cfg);
  ExperimentOptions options;
  options.noise = *cfg.noise;
  options.trials = cfg.trials;
  options.master_seed = cfg.seed;
  options.sampling = cfg.sampling;
  options.threads = cfg.threads;
  SimulateOutputs out;
  out.result = RunExperiment(truth, options);
  const ExperimentResult& r = out.result;

  const auto dir = PrepareOutputDir(cfg);
  nlohmann::json meta = Provenance(cfg, truth, r.privacy.sigma);
  meta["category_cuts"] = r.categories.cuts;
  for (int c = 1; c <= kCategoryCount; ++c) {
    meta["categories"].push_back({{"category", c},
                                  {"pair_count", r.table.pair_count(c)},
                                  {"record_count", r.table.RecordCount(c)},
                                  {"rel_bias_undefined_count", r.table.UndefinedCount(c)}});
  }

  if (cfg.write_records) {
    std::ostringstream records;
    WriteRecordsCsv(records, r.records);
    out.records = dir / "records.csv";
    WriteWithSidecar(out.records, records.str(), meta);
  }
  std::ostringstream aggregate;
  WriteAggregateCsv(aggregate, r.table);
  out.aggregate = dir / "aggregate.csv";
  WriteWithSidecar(out.aggregate, aggregate.str(), meta);

  std::ostringstream pairs;
  WritePairsCsv(pairs, r.pair_summaries);
  out.pairs = dir / "pairs.csv";
  WriteWithSidecar(out.pairs, pairs.str(), meta);

  out.trend = dir / "trend.json";
  WriteWithSidecar(out.trend, ToJson(MakeTrendReport(r.table)).dump(2) + "\n", meta);
  return out;
}

struct BoundsOutputs {
  std::filesystem::path table;
  std::vector<BoundReport> rows;
};

inline void WriteBoundsCsv(std::ostream& out, const std::vector<BoundReport>& rows) {
  out << kBoundsCsvHeader << '\n';
  for (const BoundReport& r : rows) {
    out << FormatDouble(r.beta) << ',' << FormatDouble(r.sum_bound) << ','
        << FormatDouble(r.coarse_bound) << ',' << (r.exact ? FormatDouble(*r.exact) : "")
        << ',' << FormatDouble(r.corollary_bound) << ',' << FormatDouble(r.sigma) << ','
        << r.ensemble_size << ',' << r.s_max << '\n';
  }
}

inline BoundsOutputs CmdBounds(const RunConfig& cfg) {
  if (!cfg.bounds) throw ConfigError("bounds: required for the bounds command");
  if (!cfg.noise) throw ConfigError("privacy: required for bounds");
  const WeightedGraph g = ResolveGraph(cfg);
  const BoundsConfig& b = *cfg.bounds;
  g.CheckNode(b.source);
  g.CheckNode(b.target);
  if (b.source == b.target) throw ConfigError("bounds: source and target must differ");
  const double sigma = ResolveNoise(*cfg.noise, g).sigma;
  if (!(sigma > 0.0)) throw ConfigError("bounds: resolved sigma must be > 0");

  const PathEnsemble ensemble = EnumeratePaths(g, b.source, b.target, b.limits);
  if (ensemble.truncated) {
    std::string limit = ensemble.paths.size() >= b.limits.max_paths
                            ? "max_paths=" + std::to_string(b.limits.max_paths)
                            : "max_hops=" + std::to_string(b.limits.max_hops);
    throw CompletenessError("path enumeration for (" + std::to_string(b.source) + "," +
                            std::to_string(b.target) + ") stopped at " + limit +
                            "; bounds need every simple path");
  }
  BoundsOutputs out;
  for (double beta : b.betas) {
    out.rows.push_back(ComputeBoundReport(g, ensemble, beta, sigma, b.gamma_confidence));
  }
  const auto dir = PrepareOutputDir(cfg);
  std::ostringstream csv;
  WriteBoundsCsv(csv, out.rows);
  nlohmann::json meta = Provenance(cfg, g, sigma);
  meta["ensemble_size"] = ensemble.paths.size();
  meta["edge_disjoint"] = IsEdgeDisjoint(ensemble.paths);
  out.table = dir / "bounds.csv";
  WriteWithSidecar(out.table, csv.str(), meta);
  return out;
}

struct SweepRun {
  std::string label;
  RunConfig config;
  double sigma = 0.0;
};

// Cartesian product of the sweep lists; an empty list keeps the base value.
inline std::vector<SweepRun> ExpandSweep(const RunConfig& base) {
  if (!base.sweep) throw ConfigError("sweep: required for the sweep command");
  if (!base.graph) throw ConfigError("graph: sweep needs a generated graph spec");
  const SweepConfig& s = *base.sweep;
  auto or_base = [](const auto& list, auto value) {
    using T = typename std::decay_t<decltype(list)>::value_type;
    return list.empty() ? std::vector<T>{static_cast<T>(value)} : list;
  };
  std::vector<std::optional<double>> noise;
  if (s.noise_pct.empty()) {
    noise.push_back(std::nullopt);
  } else {
    for (double p : s.noise_pct) noise.push_back(p);
  }
  const GraphSpec& g = *base.graph;
  std::vector<SweepRun> runs;
  for (int n : or_base(s.n, g.n)) {
    for (double r : s.r.empty() ? std::vector<double>{g.r.value_or(0.0)} : s.r) {
      for (double gamma : s.gamma.empty() ? std::vector<double>{g.gamma.value_or(0.0)} : s.gamma) {
        for (double sp : or_base(s.sparsity, g.sparsity)) {
          for (const auto& pct : noise) {
            SweepRun run;
            run.config = base;
            run.config.sweep.reset();
            GraphSpec& spec = *run.config.graph;
            spec.n = n;
            if (spec.graph_class == GraphClass::kWheel) spec.r = r;
            if (spec.graph_class == GraphClass::kScaleFree) spec.gamma = gamma;
            spec.sparsity = sp;
            spec.Validate();
            if (pct) run.config.noise = PercentNoise{*pct};
            if (!run.config.noise) throw ConfigError("privacy: required for sweep");
            std::ostringstream label;
            label << "run" << runs.size() << "_" << ToString(spec.graph_class) << "_n" << n;
            if (spec.r) label << "_r" << FormatDouble(*spec.r);
            if (spec.gamma) label << "_gamma" << FormatDouble(*spec.gamma);
            label << "_sp" << FormatDouble(sp);
            if (pct) label << "_noise" << FormatDouble(*pct);
            run.label = label.str();
            run.config.output_dir =
                (std::filesystem::path(base.output_dir) / run.label).string();
            runs.push_back(std::move(run));
          }
        }
      }
    }
  }
  return runs;
}

inline constexpr const char* kSweepIndexHeader =
    "run,output_dir,class,n,r,gamma,sparsity,privacy,sigma";

inline std::vector<SweepRun> CmdSweep(const RunConfig& cfg) {
  std::vector<SweepRun> runs = ExpandSweep(cfg);
  std::ostringstream index;
  index << kSweepIndexHeader << '\n';
  for (SweepRun& run : runs) {
    const SimulateOutputs out = CmdSimulate(run.config);
    run.sigma = out.result.privacy.sigma;
    const GraphSpec& spec = *run.config.graph;
    index << run.label << ',' << run.config.output_dir << ',' << ToString(spec.graph_class)
          << ',' << spec.n << ',' << (spec.r ? FormatDouble(*spec.r) : "") << ','
          << (spec.gamma ? FormatDouble(*spec.gamma) : "") << ',' << FormatDouble(spec.sparsity)
          << ',' << Describe(*run.config.noise) << ',' << FormatDouble(run.sigma) << '\n';
  }
  const auto dir = PrepareOutputDir(cfg);
  nlohmann::json meta = {{"tool", "dpgraph"}, {"version", kVersion}, {"config", ToJson(cfg)}};
  WriteWithSidecar(dir / "sweep.csv", index.str(), meta);
  return runs;
}

}  // namespace dpgraph

#endif  // DPGRAPH_CLI_H_
