// Copyright 2026 The gadmcmc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GADMCMC_HARNESS_HPP
#define GADMCMC_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gadmcmc/chain.hpp"
#include "gadmcmc/diagnostics.hpp"
#include "gadmcmc/targets.hpp"

namespace gadmcmc {

/// What to sample. Only the fields relevant to `kind` are serialised.
///   neal_gaussian          dim
///   diagonal_gaussian      stds
///   correlated_gaussian_2d rho
///   kernel_gaussian        grid_points, low, high
///   logistic_regression    dataset, prior_variance, standardize
///   synthetic_logistic     rows, features, data_seed, prior_variance
struct TargetSpec {
  std::string kind = "neal_gaussian";
  Index dim = 100;
  std::vector<double> stds;
  double rho = 0.99;
  Index grid_points = 51;
  double low = 0.0;
  double high = 4.0;
  std::string dataset;
  double prior_variance = 100.0;
  bool standardize = true;
  Index rows = 500;
  Index features = 10;
  std::uint64_t data_seed = 1;

  friend bool operator==(const TargetSpec &, const TargetSpec &) = default;
};

struct SamplerSpec {
  SamplerKind kind = SamplerKind::kGadMALAf;
  std::optional<double> eta;
  std::optional<double> alpha_star;
  std::optional<int> leapfrog_steps;  // HMC only, default 10

  /// Display name used in result rows, e.g. "gadMALAf" or "HMC-20".
  std::string label() const;

  friend bool operator==(const SamplerSpec &, const SamplerSpec &) = default;
};

struct ExperimentConfig {
  TargetSpec target;
  std::vector<SamplerSpec> samplers;
  Index burn_in = 20000;
  Index samples = 20000;
  Index repeats = 10;
  std::uint64_t seed = 0;
  std::string output_dir = "results";
  int jobs = 1;
  Index trace_coordinate = -1;  // negative counts from the end
  bool write_samples = false;

  friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;
};

/// Strict parse: unknown keys, wrong types and missing required fields raise
/// ConfigError naming the key.
ExperimentConfig parse_config(const nlohmann::json &j);
ExperimentConfig load_config(const std::string &path);
/// Fully defaulted serialisation; parse_config(to_json(c)) == c.
nlohmann::json to_json(const ExperimentConfig &c);
/// FNV-1a of the canonical JSON dump, as 16 hex digits.
std::string config_hash(const ExperimentConfig &c);

TargetPtr build_target(const TargetSpec &spec);

/// Result of one sampler on one target, independent of the sampler family.
struct SamplerOutcome {
  ChainTrace trace;
  RunSummary summary;
  std::optional<TriangularScale> scale;  // adapted L where one exists
  std::optional<double> beta;
};

SamplerOutcome run_sampler(const TargetModel &t, const SamplerSpec &spec, Index burn_in,
                           Index samples, std::uint64_t seed);

struct RunRow {
  std::string sampler;
  std::string target;
  Index repeat = 0;
  std::uint64_t seed = 0;
  RunSummary summary;
  std::string error;  // empty on success
};

struct AggregateRow {
  std::string sampler;
  std::string target;
  Index runs = 0;
  double time_s = 0.0;
  double accept_rate = 0.0;
  double ess_min = 0.0;
  double ess_med = 0.0;
  double ess_max = 0.0;
  double min_ess_per_s = 0.0;
  double min_ess_per_s_sd = 0.0;
};

struct ExperimentResults {
  std::vector<RunRow> runs;
  std::vector<AggregateRow> aggregates;
  std::string config_hash;
};

inline constexpr const char *kRunCsvHeader =
    "sampler,target,repeat,seed,time_s,accept_rate,ess_min,ess_med,ess_max,min_ess_per_s,error";
inline constexpr const char *kAggregateCsvHeader =
    "sampler,target,runs,time_s,accept_rate,ess_min,ess_med,ess_max,min_ess_per_s,"
    "min_ess_per_s_sd";

/// Runs every sampler x repeat (seed = base seed + repeat). Failed runs keep
/// their error text and are left out of the aggregates. When output_dir is
/// non-empty writes runs.csv, summary.csv, metadata.json and plot data.
ExperimentResults run_experiment(const ExperimentConfig &cfg);

std::vector<AggregateRow> aggregate_runs(const std::vector<RunRow> &runs);
void write_run_csv(std::ostream &out, const std::vector<RunRow> &rows);
void write_aggregate_csv(std::ostream &out, const std::vector<AggregateRow> &rows);

/// Numeric CSV with an optional header row; used by the `ess` command.
struct NumericTable {
  std::vector<std::string> columns;
  Matrix values;
};
NumericTable read_numeric_csv(std::istream &in);

/// The built-in benchmark suite with the experimental defaults.
std::vector<ExperimentConfig> bench_configs(const std::string &output_dir);

}  // namespace gadmcmc

#endif  // GADMCMC_HARNESS_HPP
