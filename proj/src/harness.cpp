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

#include "gadmcmc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "gadmcmc/adapt.hpp"
#include "gadmcmc/baselines.hpp"
#include "gadmcmc/dataset.hpp"
#include "gadmcmc/errors.hpp"
#include "gadmcmc/rng.hpp"

namespace gadmcmc {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

/// Reads keys from a JSON object and rejects whatever was not consumed.
class ObjectReader {
 public:
  ObjectReader(const json &j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ConfigError(where_ + ": expected a JSON object");
  }

  template <typename T>
  std::optional<T> optional(const std::string &key) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return std::nullopt;
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean()) throw ConfigError("");
      } else if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer()) throw ConfigError("");
        if constexpr (std::is_unsigned_v<T>) {
          if (it->is_number_integer() && !it->is_number_unsigned() && it->get<long long>() < 0) {
            throw ConfigError("");
          }
        }
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!it->is_number()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!it->is_string()) throw ConfigError("");
      }
      return it->get<T>();
    } catch (const std::exception &) {
      throw ConfigError(where_ + ": key '" + key + "' has the wrong type");
    }
  }

  template <typename T>
  T value_or(const std::string &key, T fallback) {
    return optional<T>(key).value_or(fallback);
  }

  template <typename T>
  T required(const std::string &key) {
    auto v = optional<T>(key);
    if (!v) throw ConfigError(where_ + ": missing required key '" + key + "'");
    return *v;
  }

  const json *raw(const std::string &key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ConfigError(where_ + ": unknown key '" + it.key() + "'");
      }
    }
  }

 private:
  const json &j_;
  std::string where_;
  std::set<std::string> seen_;
};

const std::set<std::string> kTargetKinds = {"neal_gaussian",       "diagonal_gaussian",
                                            "correlated_gaussian_2d", "kernel_gaussian",
                                            "logistic_regression", "synthetic_logistic"};

TargetSpec parse_target(const json &j) {
  TargetSpec t;
  if (j.is_string()) {
    t.kind = j.get<std::string>();
    if (!kTargetKinds.count(t.kind)) throw ConfigError("target: unknown kind '" + t.kind + "'");
    if (t.kind == "logistic_regression") throw ConfigError("target: missing required key 'dataset'");
    if (t.kind == "diagonal_gaussian") throw ConfigError("target: missing required key 'stds'");
    return t;
  }
  ObjectReader r(j, "target");
  t.kind = r.required<std::string>("kind");
  if (!kTargetKinds.count(t.kind)) throw ConfigError("target: unknown kind '" + t.kind + "'");
  if (t.kind == "neal_gaussian") {
    t.dim = r.value_or<Index>("dim", t.dim);
    if (t.dim < 1) throw ConfigError("target: key 'dim' must be >= 1");
  } else if (t.kind == "diagonal_gaussian") {
    t.stds = r.required<std::vector<double>>("stds");
    if (t.stds.empty() || std::any_of(t.stds.begin(), t.stds.end(), [](double s) { return !(s > 0); })) {
      throw ConfigError("target: key 'stds' must be a non-empty list of positive numbers");
    }
  } else if (t.kind == "correlated_gaussian_2d") {
    t.rho = r.value_or<double>("rho", t.rho);
    if (!(std::abs(t.rho) < 1.0)) throw ConfigError("target: key 'rho' must satisfy |rho| < 1");
  } else if (t.kind == "kernel_gaussian") {
    t.grid_points = r.value_or<Index>("grid_points", t.grid_points);
    t.low = r.value_or<double>("low", t.low);
    t.high = r.value_or<double>("high", t.high);
    if (t.grid_points < 2) throw ConfigError("target: key 'grid_points' must be >= 2");
    if (!(t.high > t.low)) throw ConfigError("target: key 'high' must exceed 'low'");
  } else if (t.kind == "logistic_regression") {
    t.dataset = r.required<std::string>("dataset");
    t.prior_variance = r.value_or<double>("prior_variance", t.prior_variance);
    t.standardize = r.value_or<bool>("standardize", t.standardize);
  } else {  // synthetic_logistic
    t.rows = r.value_or<Index>("rows", t.rows);
    t.features = r.value_or<Index>("features", t.features);
    t.data_seed = r.value_or<std::uint64_t>("data_seed", t.data_seed);
    t.prior_variance = r.value_or<double>("prior_variance", t.prior_variance);
    if (t.rows < 1 || t.features < 1) throw ConfigError("target: 'rows' and 'features' must be >= 1");
  }
  if ((t.kind == "logistic_regression" || t.kind == "synthetic_logistic") &&
      !(t.prior_variance > 0.0)) {
    throw ConfigError("target: key 'prior_variance' must be positive");
  }
  r.finish();
  return t;
}

json target_to_json(const TargetSpec &t) {
  json j{{"kind", t.kind}};
  if (t.kind == "neal_gaussian") {
    j["dim"] = t.dim;
  } else if (t.kind == "diagonal_gaussian") {
    j["stds"] = t.stds;
  } else if (t.kind == "correlated_gaussian_2d") {
    j["rho"] = t.rho;
  } else if (t.kind == "kernel_gaussian") {
    j["grid_points"] = t.grid_points;
    j["low"] = t.low;
    j["high"] = t.high;
  } else if (t.kind == "logistic_regression") {
    j["dataset"] = t.dataset;
    j["prior_variance"] = t.prior_variance;
    j["standardize"] = t.standardize;
  } else {
    j["rows"] = t.rows;
    j["features"] = t.features;
    j["data_seed"] = t.data_seed;
    j["prior_variance"] = t.prior_variance;
  }
  return j;
}

SamplerSpec parse_sampler(const json &j, std::size_t index) {
  const std::string where = "samplers[" + std::to_string(index) + "]";
  SamplerSpec s;
  if (j.is_string()) {
    s.kind = parse_sampler_kind(j.get<std::string>());
    return s;
  }
  ObjectReader r(j, where);
  s.kind = parse_sampler_kind(r.required<std::string>("kind"));
  s.eta = r.optional<double>("eta");
  s.alpha_star = r.optional<double>("alpha_star");
  s.leapfrog_steps = r.optional<int>("leapfrog_steps");
  r.finish();
  if (s.eta && !is_gradient_adaptive(s.kind)) {
    throw ConfigError(where + ": key 'eta' only applies to gradient-adaptive samplers");
  }
  if (s.eta && !(*s.eta > 0.0)) throw ConfigError(where + ": key 'eta' must be positive");
  if (s.alpha_star && s.kind == SamplerKind::kAM) {
    throw ConfigError(where + ": key 'alpha_star' does not apply to AM");
  }
  if (s.alpha_star && !(*s.alpha_star > 0.0 && *s.alpha_star < 1.0)) {
    throw ConfigError(where + ": key 'alpha_star' must lie in (0, 1)");
  }
  if (s.leapfrog_steps && s.kind != SamplerKind::kHMC) {
    throw ConfigError(where + ": key 'leapfrog_steps' only applies to HMC");
  }
  if (s.leapfrog_steps && *s.leapfrog_steps < 1) {
    throw ConfigError(where + ": key 'leapfrog_steps' must be >= 1");
  }
  return s;
}

json sampler_to_json(const SamplerSpec &s) {
  json j{{"kind", to_string(s.kind)}};
  if (s.eta) j["eta"] = *s.eta;
  if (s.alpha_star) j["alpha_star"] = *s.alpha_star;
  if (s.leapfrog_steps) j["leapfrog_steps"] = *s.leapfrog_steps;
  return j;
}

std::string csv_safe(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; }, ';');
  return s;
}

std::string file_safe(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return !(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.'); }, '_');
  return s;
}

std::string num(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  return fmt::format("{}", v);
}

}  // namespace

std::string SamplerSpec::label() const {
  std::string out = to_string(kind);
  if (kind == SamplerKind::kHMC) out += "-" + std::to_string(leapfrog_steps.value_or(10));
  if (alpha_star) out += fmt::format("[alpha={}]", *alpha_star);
  if (eta) out += fmt::format("[eta={}]", *eta);
  return out;
}

ExperimentConfig parse_config(const json &j) {
  ObjectReader r(j, "config");
  ExperimentConfig c;
  const json *target = r.raw("target");
  if (!target) throw ConfigError("config: missing required key 'target'");
  c.target = parse_target(*target);
  const json *samplers = r.raw("samplers");
  if (!samplers) throw ConfigError("config: missing required key 'samplers'");
  if (!samplers->is_array() || samplers->empty()) {
    throw ConfigError("config: key 'samplers' must be a non-empty array");
  }
  for (std::size_t i = 0; i < samplers->size(); ++i) c.samplers.push_back(parse_sampler((*samplers)[i], i));
  c.burn_in = r.value_or<Index>("burn_in", c.burn_in);
  c.samples = r.value_or<Index>("samples", c.samples);
  c.repeats = r.value_or<Index>("repeats", c.repeats);
  c.seed = r.value_or<std::uint64_t>("seed", c.seed);
  c.output_dir = r.value_or<std::string>("output_dir", c.output_dir);
  c.jobs = r.value_or<int>("jobs", c.jobs);
  c.trace_coordinate = r.value_or<Index>("trace_coordinate", c.trace_coordinate);
  c.write_samples = r.value_or<bool>("write_samples", c.write_samples);
  r.finish();
  if (c.burn_in < 1) throw ConfigError("config: key 'burn_in' must be >= 1");
  if (c.samples < 10) throw ConfigError("config: key 'samples' must be >= 10");
  if (c.repeats < 1) throw ConfigError("config: key 'repeats' must be >= 1");
  if (c.jobs < 1) throw ConfigError("config: key 'jobs' must be >= 1");
  return c;
}

ExperimentConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ConfigError("config parse error in '" + path + "': " + e.what());
  }
  ExperimentConfig c = parse_config(j);
  if (c.target.kind == "logistic_regression") {
    fs::path p(c.target.dataset);
    if (p.is_relative() && !fs::exists(p)) p = fs::path(path).parent_path() / p;
    if (!fs::exists(p)) {
      throw ConfigError("target: key 'dataset' refers to a missing file '" + c.target.dataset + "'");
    }
    c.target.dataset = p.string();
  }
  return c;
}

json to_json(const ExperimentConfig &c) {
  json samplers = json::array();
  for (const auto &s : c.samplers) samplers.push_back(sampler_to_json(s));
  return json{{"target", target_to_json(c.target)},
              {"samplers", samplers},
              {"burn_in", c.burn_in},
              {"samples", c.samples},
              {"repeats", c.repeats},
              {"seed", c.seed},
              {"output_dir", c.output_dir},
              {"jobs", c.jobs},
              {"trace_coordinate", c.trace_coordinate},
              {"write_samples", c.write_samples}};
}

std::string config_hash(const ExperimentConfig &c) {
  json j = to_json(c);
  // Execution details that do not change results.
  j.erase("jobs");
  j.erase("output_dir");
  const std::string s = j.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return fmt::format("{:016x}", h);
}

TargetPtr build_target(const TargetSpec &spec) {
  if (spec.kind == "neal_gaussian") return make_neal_gaussian(spec.dim);
  if (spec.kind == "diagonal_gaussian") {
    return make_diagonal_gaussian(Eigen::Map<const VectorXd>(spec.stds.data(), static_cast<Index>(spec.stds.size())));
  }
  if (spec.kind == "correlated_gaussian_2d") return make_correlated_gaussian_2d(spec.rho);
  if (spec.kind == "kernel_gaussian") return make_kernel_gaussian(spec.grid_points, spec.low, spec.high);
  if (spec.kind == "logistic_regression") {
    return std::make_shared<LogisticRegressionTarget>(
        load_csv_dataset(spec.dataset, spec.standardize), spec.prior_variance,
        "logistic_regression:" + fs::path(spec.dataset).stem().string());
  }
  if (spec.kind == "synthetic_logistic") {
    return std::make_shared<LogisticRegressionTarget>(
        make_synthetic_logistic_dataset(spec.rows, spec.features, spec.data_seed), spec.prior_variance,
        fmt::format("synthetic_logistic_{}x{}", spec.rows, spec.features + 1));
  }
  throw ConfigError("unknown target kind '" + spec.kind + "'");
}

SamplerOutcome run_sampler(const TargetModel &t, const SamplerSpec &spec, Index burn_in,
                           Index samples, std::uint64_t seed) {
  SamplerOutcome out;
  if (is_gradient_adaptive(spec.kind)) {
    AdaptiveConfig cfg;
    cfg.burn_in = burn_in;
    cfg.samples = samples;
    cfg.eta = spec.eta;
    cfg.alpha_star = spec.alpha_star;
    AdaptiveRun run = run_adaptive_chain(t, spec.kind, cfg, seed);
    out.trace = std::move(run.trace);
    out.summary = std::move(run.summary);
    out.scale = std::move(run.state.L);
    out.beta = run.state.beta;
  } else {
    BaselineConfig cfg;
    cfg.burn_in = burn_in;
    cfg.samples = samples;
    cfg.alpha_star = spec.alpha_star;
    cfg.leapfrog_steps = spec.leapfrog_steps.value_or(10);
    BaselineRun run = run_baseline_chain(t, spec.kind, cfg, seed);
    out.trace = std::move(run.trace);
    out.summary = std::move(run.summary);
    if (spec.kind == SamplerKind::kAM) out.scale = std::move(run.scale);
  }
  out.summary.sampler = spec.label();
  return out;
}

std::vector<AggregateRow> aggregate_runs(const std::vector<RunRow> &runs) {
  std::vector<AggregateRow> out;
  for (const auto &row : runs) {
    auto it = std::find_if(out.begin(), out.end(), [&](const AggregateRow &a) {
      return a.sampler == row.sampler && a.target == row.target;
    });
    if (it == out.end()) {
      out.push_back(AggregateRow{row.sampler, row.target});
      it = out.end() - 1;
    }
  }
  for (auto &agg : out) {
    std::vector<const RunRow *> ok;
    for (const auto &row : runs) {
      if (row.sampler == agg.sampler && row.target == agg.target && row.error.empty()) ok.push_back(&row);
    }
    agg.runs = static_cast<Index>(ok.size());
    if (ok.empty()) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      agg.time_s = agg.accept_rate = agg.ess_min = agg.ess_med = agg.ess_max = nan;
      agg.min_ess_per_s = agg.min_ess_per_s_sd = nan;
      continue;
    }
    const double k = static_cast<double>(ok.size());
    for (const RunRow *r : ok) {
      agg.time_s += r->summary.wall_time / k;
      agg.accept_rate += r->summary.accept_rate / k;
      agg.ess_min += r->summary.ess_min / k;
      agg.ess_med += r->summary.ess_med / k;
      agg.ess_max += r->summary.ess_max / k;
      agg.min_ess_per_s += r->summary.min_ess_per_sec / k;
    }
    double ss = 0.0;
    for (const RunRow *r : ok) ss += std::pow(r->summary.min_ess_per_sec - agg.min_ess_per_s, 2);
    agg.min_ess_per_s_sd = ok.size() > 1 ? std::sqrt(ss / (k - 1.0)) : 0.0;
  }
  return out;
}

void write_run_csv(std::ostream &out, const std::vector<RunRow> &rows) {
  out << kRunCsvHeader << '\n';
  for (const auto &r : rows) {
    out << csv_safe(r.sampler) << ',' << csv_safe(r.target) << ',' << r.repeat << ',' << r.seed << ',';
    if (r.error.empty()) {
      const auto &s = r.summary;
      out << num(s.wall_time) << ',' << num(s.accept_rate) << ',' << num(s.ess_min) << ','
          << num(s.ess_med) << ',' << num(s.ess_max) << ',' << num(s.min_ess_per_sec) << ',';
    } else {
      out << ",,,,,," << csv_safe(r.error);
    }
    out << '\n';
  }
}

void write_aggregate_csv(std::ostream &out, const std::vector<AggregateRow> &rows) {
  out << kAggregateCsvHeader << '\n';
  for (const auto &a : rows) {
    out << csv_safe(a.sampler) << ',' << csv_safe(a.target) << ',' << a.runs << ',' << num(a.time_s)
        << ',' << num(a.accept_rate) << ',' << num(a.ess_min) << ',' << num(a.ess_med) << ','
        << num(a.ess_max) << ',' << num(a.min_ess_per_s) << ',' << num(a.min_ess_per_s_sd) << '\n';
  }
}

namespace {

struct PlotData {
  VectorXd coordinate_trace;
  VectorXd log_target;
  std::optional<VectorXd> diag_L;
};

void write_columns(const fs::path &path, const VectorXd &x, const VectorXd &y) {
  std::ofstream f(path);
  for (Index i = 0; i < y.size(); ++i) f << num(x(i)) << ' ' << num(y(i)) << '\n';
}

void write_plot_data(const fs::path &dir, const std::string &label, const PlotData &p,
                     const std::optional<VectorXd> &true_stds) {
  fs::create_directories(dir);
  const std::string stem = file_safe(label);
  write_columns(dir / ("trace_" + stem + ".dat"),
                VectorXd::LinSpaced(p.coordinate_trace.size(), 0, static_cast<double>(p.coordinate_trace.size() - 1)),
                p.coordinate_trace);
  write_columns(dir / ("logpi_" + stem + ".dat"),
                VectorXd::LinSpaced(p.log_target.size(), 0, static_cast<double>(p.log_target.size() - 1)),
                p.log_target);
  if (p.diag_L) {
    std::ofstream f(dir / ("diagL_" + stem + ".dat"));
    for (Index i = 0; i < p.diag_L->size(); ++i) {
      f << i << ' ' << num((*p.diag_L)(i));
      if (true_stds && true_stds->size() == p.diag_L->size()) f << ' ' << num((*true_stds)(i));
      f << '\n';
    }
  }
}

void write_samples_csv(const fs::path &path, const Matrix &states) {
  std::ofstream f(path);
  for (Index j = 0; j < states.cols(); ++j) f << (j ? "," : "") << 'x' << j;
  f << '\n';
  for (Index i = 0; i < states.rows(); ++i) {
    for (Index j = 0; j < states.cols(); ++j) f << (j ? "," : "") << num(states(i, j));
    f << '\n';
  }
}

}  // namespace

ExperimentResults run_experiment(const ExperimentConfig &cfg) {
  const TargetPtr target = build_target(cfg.target);
  const Index n = target->dim();
  Index coord = cfg.trace_coordinate < 0 ? n + cfg.trace_coordinate : cfg.trace_coordinate;
  coord = std::clamp<Index>(coord, 0, n - 1);

  const std::size_t jobs = cfg.samplers.size() * static_cast<std::size_t>(cfg.repeats);
  std::vector<RunRow> rows(jobs);
  std::vector<std::optional<PlotData>> plots(cfg.samplers.size());
  const bool write = !cfg.output_dir.empty();
  const fs::path out_dir(cfg.output_dir);
  if (write) fs::create_directories(out_dir);
  std::mutex io_mutex;

  auto run_job = [&](std::size_t job) {
    const std::size_t s = job / static_cast<std::size_t>(cfg.repeats);
    const Index repeat = static_cast<Index>(job % static_cast<std::size_t>(cfg.repeats));
    const SamplerSpec &spec = cfg.samplers[s];
    RunRow &row = rows[job];
    row.sampler = spec.label();
    row.target = target->name();
    row.repeat = repeat;
    row.seed = cfg.seed + static_cast<std::uint64_t>(repeat);
    try {
      SamplerOutcome outcome = run_sampler(*target, spec, cfg.burn_in, cfg.samples, row.seed);
      row.summary = outcome.summary;
      if (repeat == 0) {
        PlotData p{outcome.trace.states.col(coord), outcome.trace.log_target, std::nullopt};
        if (outcome.scale) p.diag_L = outcome.scale->diagonal();
        plots[s] = std::move(p);
      }
      if (write && cfg.write_samples) {
        write_samples_csv(out_dir / fmt::format("samples_{}_r{}.csv", file_safe(row.sampler), repeat),
                          outcome.trace.states);
      }
      std::lock_guard lock(io_mutex);
      spdlog::info("{} on {} (repeat {}, seed {}): accept {:.3f}, ESS min/med/max {:.1f}/{:.1f}/{:.1f}, {:.2f}s",
                   row.sampler, row.target, repeat, row.seed, row.summary.accept_rate,
                   row.summary.ess_min, row.summary.ess_med, row.summary.ess_max, row.summary.wall_time);
    } catch (const std::exception &e) {
      row.error = e.what();
      std::lock_guard lock(io_mutex);
      spdlog::error("{} on {} (repeat {}) failed: {}", row.sampler, row.target, repeat, row.error);
    }
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), jobs);
  if (workers <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs; j = next++) run_job(j);
      });
    }
    for (auto &th : pool) th.join();
  }

  ExperimentResults results;
  results.runs = std::move(rows);
  results.aggregates = aggregate_runs(results.runs);
  results.config_hash = config_hash(cfg);

  if (write) {
    {
      std::ofstream f(out_dir / "runs.csv");
      write_run_csv(f, results.runs);
    }
    {
      std::ofstream f(out_dir / "summary.csv");
      write_aggregate_csv(f, results.aggregates);
    }
    const auto true_stds = target->marginal_stds();
    for (std::size_t s = 0; s < cfg.samplers.size(); ++s) {
      if (plots[s]) write_plot_data(out_dir / "plots", cfg.samplers[s].label(), *plots[s], true_stds);
    }
    json meta{{"config", to_json(cfg)},
              {"config_hash", results.config_hash},
              {"target", target->name()},
              {"dimension", n},
              {"rng", kRngName},
              {"seed_rule", "base_seed + repeat"},
              {"ess_estimator", kEssEstimatorName},
              {"trace_coordinate", coord}};
    if (const auto *lr = dynamic_cast<const LogisticRegressionTarget *>(target.get())) {
      meta["dataset_rows"] = lr->data().features.rows();
      meta["standardized"] = lr->data().standardized;
      meta["prior_variance"] = lr->prior_variance();
    }
    std::ofstream f(out_dir / "metadata.json");
    f << meta.dump(2) << '\n';
  }
  return results;
}

NumericTable read_numeric_csv(std::istream &in) {
  NumericTable table;
  std::vector<double> values;
  Index width = -1;
  long row = 0;
  bool first = true;
  std::string line;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    std::vector<double> parsed;
    bool numeric = true;
    for (auto &c : cells) {
      const auto b = c.find_first_not_of(" \t");
      const auto e = c.find_last_not_of(" \t");
      const std::string t = b == std::string::npos ? "" : c.substr(b, e - b + 1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        numeric = false;
        break;
      }
      parsed.push_back(v);
    }
    if (first) {
      first = false;
      if (!numeric) {
        table.columns = cells;
        width = static_cast<Index>(cells.size());
        continue;
      }
    }
    if (!numeric) throw IngestionError("non-numeric cell", row);
    if (width < 0) width = static_cast<Index>(parsed.size());
    if (static_cast<Index>(parsed.size()) != width) throw IngestionError("ragged row", row);
    values.insert(values.end(), parsed.begin(), parsed.end());
  }
  if (width <= 0 || values.empty()) throw IngestionError("no data rows", row);
  if (table.columns.empty()) {
    for (Index j = 0; j < width; ++j) table.columns.push_back("col" + std::to_string(j));
  }
  const Index rows_read = static_cast<Index>(values.size()) / width;
  table.values = Eigen::Map<const Matrix>(values.data(), rows_read, width);
  return table;
}

std::vector<ExperimentConfig> bench_configs(const std::string &output_dir) {
  auto make = [&](TargetSpec target, std::vector<SamplerSpec> samplers, const std::string &sub) {
    ExperimentConfig c;
    c.target = std::move(target);
    c.samplers = std::move(samplers);
    c.output_dir = output_dir.empty() ? std::string() : (fs::path(output_dir) / sub).string();
    return c;
  };
  using K = SamplerKind;
  auto S = [](K k, std::optional<double> alpha = std::nullopt, std::optional<int> lf = std::nullopt,
              std::optional<double> eta = std::nullopt) {
    SamplerSpec s;
    s.kind = k;
    s.alpha_star = alpha;
    s.leapfrog_steps = lf;
    s.eta = eta;
    return s;
  };
  std::vector<ExperimentConfig> out;
  TargetSpec neal;
  neal.kind = "neal_gaussian";
  neal.dim = 100;
  out.push_back(make(neal,
                     {S(K::kGadMALAf), S(K::kGadMALAe), S(K::kGadRWM), S(K::kAM), S(K::kRWM),
                      S(K::kMALA), S(K::kHMC, std::nullopt, 20)},
                     "neal_gaussian_100"));
  TargetSpec corr;
  corr.kind = "correlated_gaussian_2d";
  out.push_back(make(corr,
                     {S(K::kGadRWM), S(K::kGadRWM, std::nullopt, std::nullopt, 1e-3),
                      S(K::kGadRWM, 0.4, std::nullopt, 1e-3), S(K::kGadMALAf), S(K::kAM), S(K::kRWM),
                      S(K::kMALA)},
                     "correlated_gaussian_2d"));
  TargetSpec kernel;
  kernel.kind = "kernel_gaussian";
  out.push_back(make(kernel,
                     {S(K::kGadMALAf), S(K::kGadMALAe), S(K::kGadRWM), S(K::kAM), S(K::kMALA),
                      S(K::kHMC, std::nullopt, 10)},
                     "kernel_gaussian_51"));
  TargetSpec logistic;
  logistic.kind = "synthetic_logistic";
  out.push_back(make(logistic,
                     {S(K::kGadMALAf), S(K::kGadMALAe), S(K::kGadRWM), S(K::kAM), S(K::kRWM),
                      S(K::kMALA), S(K::kHMC, std::nullopt, 10)},
                     "synthetic_logistic"));
  return out;
}

}  // namespace gadmcmc
