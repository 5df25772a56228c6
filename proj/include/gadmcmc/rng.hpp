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

#ifndef GADMCMC_RNG_HPP
#define GADMCMC_RNG_HPP

#include <cstdint>
#include <random>

#include "gadmcmc/linalg.hpp"

namespace gadmcmc {

inline constexpr const char *kRngName = "std::mt19937_64+std::normal_distribution";

/// Per-chain random source. Every sampler draws through this type in the same
/// order (initial state, then per iteration noise before the uniform), so that
/// kernels with identical parameters reproduce each other's chains.
class ChainRng {
 public:
  explicit ChainRng(std::uint64_t seed) : engine_(seed) {}

  VectorXd standard_normal(Index n) {
    VectorXd out(n);
    for (Index i = 0; i < n; ++i) out(i) = normal_(engine_);
    return out;
  }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

}  // namespace gadmcmc

#endif  // GADMCMC_RNG_HPP
