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

#ifndef GADMCMC_DIAGNOSTICS_HPP
#define GADMCMC_DIAGNOSTICS_HPP

#include <cstdint>
#include <span>
#include <string>

#include "gadmcmc/chain.hpp"

namespace gadmcmc {

inline constexpr const char *kEssEstimatorName = "geyer_initial_positive_sequence";

struct EssEstimate {
  double value = 1.0;
  bool degenerate = false;  // zero-variance series
};

/// Effective sample size with Geyer's initial positive sequence: autocorrelation
/// pairs rho_{2m} + rho_{2m+1} are summed until the first nonpositive pair.
/// Result is clamped to [1, N]. Requires N >= 10.
EssEstimate effective_sample_size(std::span<const double> series);

inline double ess(std::span<const double> series) { return effective_sample_size(series).value; }

struct RunSummary {
  double ess_min = 0.0;
  double ess_med = 0.0;
  double ess_max = 0.0;
  double accept_rate = 0.0;  // sampling phase only
  double wall_time = 0.0;
  double min_ess_per_sec = 0.0;
  Index degenerate_dims = 0;
  std::uint64_t seed = 0;
  std::string sampler;
  std::string target;
  std::string estimator = kEssEstimatorName;
};

/// Per-dimension ESS of the retained samples, reduced to min / median / max.
/// The median of an even count is the midpoint of the two central values.
RunSummary summarize_run(const ChainTrace &trace);

double median(std::vector<double> values);

}  // namespace gadmcmc

#endif  // GADMCMC_DIAGNOSTICS_HPP
