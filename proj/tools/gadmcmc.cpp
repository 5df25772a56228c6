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

// gadmcmc command line:
//   gadmcmc run <config.json> [--out DIR] [--seed N] [--jobs K]
//   gadmcmc ess <trace.csv>
//   gadmcmc bench [--out DIR] [--repeats R] [--burn-in B] [--samples S] [--jobs K]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "gadmcmc/diagnostics.hpp"
#include "gadmcmc/errors.hpp"
#include "gadmcmc/harness.hpp"

namespace {

void print_aggregates(const gadmcmc::ExperimentResults &r) {
  gadmcmc::write_aggregate_csv(std::cout, r.aggregates);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Gradient-based adaptive MCMC samplers and benchmarks"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> run_out;
  std::optional<std::uint64_t> run_seed;
  std::optional<int> run_jobs;
  auto *run = app.add_subcommand("run", "Run an experiment described by a JSON config");
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--out", run_out, "Output directory (overrides output_dir)");
  run->add_option("--seed", run_seed, "Base seed (overrides seed)");
  run->add_option("--jobs", run_jobs, "Concurrent runs")->check(CLI::PositiveNumber);

  std::string trace_path;
  auto *ess = app.add_subcommand("ess", "Print the effective sample size of every CSV column");
  ess->add_option("trace", trace_path, "Numeric CSV, optional header row")->required();

  std::string bench_out = "bench_results";
  std::optional<long> bench_repeats, bench_burn, bench_samples;
  std::optional<std::uint64_t> bench_seed;
  int bench_jobs = 1;
  auto *bench = app.add_subcommand("bench", "Run the built-in benchmark suite");
  bench->add_option("--out", bench_out, "Output directory");
  bench->add_option("--repeats", bench_repeats, "Repeats per sampler (default 10)")->check(CLI::PositiveNumber);
  bench->add_option("--burn-in", bench_burn, "Burn-in iterations (default 20000)")->check(CLI::PositiveNumber);
  bench->add_option("--samples", bench_samples, "Retained samples (default 20000)")->check(CLI::Range(10L, 1L << 40));
  bench->add_option("--seed", bench_seed, "Base seed");
  bench->add_option("--jobs", bench_jobs, "Concurrent runs")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      gadmcmc::ExperimentConfig cfg = gadmcmc::load_config(config_path);
      if (run_out) cfg.output_dir = *run_out;
      if (run_seed) cfg.seed = *run_seed;
      if (run_jobs) cfg.jobs = *run_jobs;
      print_aggregates(gadmcmc::run_experiment(cfg));
    } else if (*ess) {
      std::ifstream in(trace_path);
      if (!in) {
        std::cerr << "error: cannot open " << trace_path << '\n';
        return 2;
      }
      const auto table = gadmcmc::read_numeric_csv(in);
      std::cout << "column,ess\n";
      for (Eigen::Index j = 0; j < table.values.cols(); ++j) {
        const Eigen::VectorXd col = table.values.col(j);
        const auto est = gadmcmc::effective_sample_size({col.data(), static_cast<std::size_t>(col.size())});
        std::cout << table.columns[static_cast<std::size_t>(j)] << ',' << est.value
                  << (est.degenerate ? ",degenerate" : "") << '\n';
      }
    } else if (*bench) {
      for (auto cfg : gadmcmc::bench_configs(bench_out)) {
        if (bench_repeats) cfg.repeats = *bench_repeats;
        if (bench_burn) cfg.burn_in = *bench_burn;
        if (bench_samples) cfg.samples = *bench_samples;
        if (bench_seed) cfg.seed = *bench_seed;
        cfg.jobs = bench_jobs;
        print_aggregates(gadmcmc::run_experiment(cfg));
      }
    }
  } catch (const gadmcmc::ConfigError &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
