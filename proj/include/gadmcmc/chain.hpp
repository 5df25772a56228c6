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

#ifndef GADMCMC_CHAIN_HPP
#define GADMCMC_CHAIN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gadmcmc/linalg.hpp"

namespace gadmcmc {

enum class SamplerKind { kGadRWM, kGadMALAf, kGadMALAe, kRWM, kMALA, kAM, kHMC };

std::string to_string(SamplerKind kind);
/// Accepts the canonical names ("gadRWM", "gadMALAf", "gadMALAe", "RWM",
/// "MALA", "AM", "HMC"); throws ConfigError otherwise.
SamplerKind parse_sampler_kind(std::string_view name);
bool is_gradient_adaptive(SamplerKind kind);

/// Output of one chain. `states` holds only the retained (post burn-in)
/// samples; `accept_flags` and `log_target` cover every iteration.
struct ChainTrace {
  Matrix states;
  std::vector<std::uint8_t> accept_flags;
  VectorXd log_target;
  Index burn_in = 0;
  double wall_time = 0.0;  // seconds, burn-in and sampling together
};

}  // namespace gadmcmc

#endif  // GADMCMC_CHAIN_HPP
