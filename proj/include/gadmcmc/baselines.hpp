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

#ifndef GADMCMC_BASELINES_HPP
#define GADMCMC_BASELINES_HPP

#include <cstdint>
#include <optional>

#include "gadmcmc/chain.hpp"
#include "gadmcmc/diagnostics.hpp"
#include "gadmcmc/linalg.hpp"
#include "gadmcmc/targets.hpp"

namespace gadmcmc {

/// Adaptive Metropolis with a Cholesky-factor update: the proposal is
/// N(y | x, L L^T) and L tracks the running covariance of the chain.
struct AmState {
  VectorXd mu;
  TriangularScale L;
  Index t = 0;
  double base_rate = 0.001;
  double horizon = 4000.0;  // rate is base_rate / (1 + t / horizon)
  double diag_floor = 1e-10;

  double rate() const { return base_rate / (1.0 + static_cast<double>(t) / horizon); }
};

/// mu <- mu + rho (x - mu); then with z = L^{-1}(x - mu),
/// L <- L + rho L [z z^T - I]_lower. O(n^2), no factorisations.
void am_update(AmState &s, const VectorXd &x_new);
/// Same update with an explicit rate; does not advance s.t.
void am_update_with_rate(AmState &s, const VectorXd &x_new, double rho);

/// Robbins-Monro step on log sigma towards the target acceptance rate.
inline double scalar_step_adapt(double log_sigma, bool accepted, double alpha_star,
                                double rate = 0.02) {
  return log_sigma + rate * ((accepted ? 1.0 : 0.0) - alpha_star);
}

struct HmcConfig {
  int leapfrog_steps = 10;
  double step_size = 0.1;
};

struct LeapfrogResult {
  VectorXd x;
  VectorXd p;
  VectorXd grad;  // grad log pi at the final position
  double log_pi = 0.0;
  bool divergent = false;
};

/// Unit-mass leapfrog for U(x) = -log pi(x): leapfrog_steps rounds of
/// half kick, drift, half kick.
LeapfrogResult hmc_leapfrog(const TargetModel &t, const VectorXd &x, const VectorXd &p,
                            const HmcConfig &cfg);
/// Variant reusing a known gradient at x.
LeapfrogResult hmc_leapfrog(const TargetModel &t, const VectorXd &x, const VectorXd &p,
                            const VectorXd &grad_x, const HmcConfig &cfg);

struct BaselineConfig {
  Index burn_in = 20000;
  Index samples = 20000;
  std::optional<double> alpha_star;     // RWM 0.234, MALA 0.574, HMC 0.651
  double step_rate = 0.02;              // log-sigma controller rate
  std::optional<double> initial_sigma;  // default 0.1 / sqrt(n); HMC step size too
  std::optional<VectorXd> initial_state;
  std::optional<TriangularScale> initial_scale;  // AM only, default diag(0.1 / sqrt(n))
  int leapfrog_steps = 10;
  double am_base_rate = 0.001;
  double am_horizon = 4000.0;
  bool adapt = true;
};

struct BaselineRun {
  ChainTrace trace;
  RunSummary summary;
  TriangularScale scale;   // sigma I for RWM / MALA, learned L for AM
  double step_size = 0.0;  // sigma, or the HMC leapfrog step
};

/// RWM and MALA use sigma^2 I; AM uses its adapted L; HMC uses a fixed
/// number of leapfrog steps with a tuned step size. All adaptation stops at
/// the end of burn-in.
BaselineRun run_baseline_chain(const TargetModel &t, SamplerKind kind,
                               const BaselineConfig &config, std::uint64_t seed);

}  // namespace gadmcmc

#endif  // GADMCMC_BASELINES_HPP
