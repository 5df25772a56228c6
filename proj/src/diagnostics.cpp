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

#include "gadmcmc/diagnostics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "gadmcmc/errors.hpp"

namespace gadmcmc {

std::string to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kGadRWM: return "gadRWM";
    case SamplerKind::kGadMALAf: return "gadMALAf";
    case SamplerKind::kGadMALAe: return "gadMALAe";
    case SamplerKind::kRWM: return "RWM";
    case SamplerKind::kMALA: return "MALA";
    case SamplerKind::kAM: return "AM";
    case SamplerKind::kHMC: return "HMC";
  }
  return "unknown";
}

SamplerKind parse_sampler_kind(std::string_view name) {
  for (auto k : {SamplerKind::kGadRWM, SamplerKind::kGadMALAf, SamplerKind::kGadMALAe,
                 SamplerKind::kRWM, SamplerKind::kMALA, SamplerKind::kAM, SamplerKind::kHMC}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown sampler kind '" + std::string(name) + "'");
}

bool is_gradient_adaptive(SamplerKind kind) {
  return kind == SamplerKind::kGadRWM || kind == SamplerKind::kGadMALAf ||
         kind == SamplerKind::kGadMALAe;
}

EssEstimate effective_sample_size(std::span<const double> series) {
  const auto n = static_cast<Index>(series.size());
  if (n < 10) throw std::invalid_argument("effective_sample_size: need at least 10 values");
  Eigen::Map<const VectorXd> raw(series.data(), n);
  if (raw.maxCoeff() == raw.minCoeff()) return {1.0, true};

  const VectorXd c = raw.array() - raw.mean();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double gamma0 = c.squaredNorm() * inv_n;
  if (!(gamma0 > 0.0)) return {1.0, true};

  auto rho = [&](Index k) -> double {
    if (k >= n) return 0.0;
    return c.head(n - k).dot(c.tail(n - k)) * inv_n / gamma0;
  };

  // tau = 1 + 2 sum_{k>=1} rho_k = -1 + 2 sum_{m>=0} (rho_{2m} + rho_{2m+1})
  double pair_sum = 0.0;
  for (Index m = 0; 2 * m < n; ++m) {
    const double pair = (m == 0 ? 1.0 : rho(2 * m)) + rho(2 * m + 1);
    if (!(pair > 0.0)) break;
    pair_sum += pair;
  }
  const double tau = -1.0 + 2.0 * pair_sum;
  const double value = static_cast<double>(n) / tau;
  return {std::clamp(value, 1.0, static_cast<double>(n)), false};
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median: empty input");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

RunSummary summarize_run(const ChainTrace &trace) {
  const Index samples = trace.states.rows();
  const Index dims = trace.states.cols();
  if (samples == 0 || dims == 0) throw std::invalid_argument("summarize_run: empty trace");

  RunSummary out;
  std::vector<double> per_dim(static_cast<std::size_t>(dims));
  VectorXd column(samples);
  for (Index j = 0; j < dims; ++j) {
    column = trace.states.col(j);
    const auto est = effective_sample_size({column.data(), static_cast<std::size_t>(samples)});
    per_dim[static_cast<std::size_t>(j)] = est.value;
    if (est.degenerate) ++out.degenerate_dims;
  }
  out.ess_min = *std::min_element(per_dim.begin(), per_dim.end());
  out.ess_max = *std::max_element(per_dim.begin(), per_dim.end());
  out.ess_med = median(per_dim);

  const auto first = trace.accept_flags.begin() + std::min<std::ptrdiff_t>(
                                                      trace.burn_in, trace.accept_flags.size());
  const auto sampled = std::distance(first, trace.accept_flags.end());
  out.accept_rate =
      sampled > 0 ? static_cast<double>(std::count(first, trace.accept_flags.end(), 1)) /
                        static_cast<double>(sampled)
                  : 0.0;
  out.wall_time = trace.wall_time;
  out.min_ess_per_sec = trace.wall_time > 0.0 ? out.ess_min / trace.wall_time : 0.0;
  return out;
}

}  // namespace gadmcmc
