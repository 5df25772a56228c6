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

#ifndef GADMCMC_ADAPT_HPP
#define GADMCMC_ADAPT_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "gadmcmc/chain.hpp"
#include "gadmcmc/diagnostics.hpp"
#include "gadmcmc/linalg.hpp"
#include "gadmcmc/proposals.hpp"
#include "gadmcmc/targets.hpp"

namespace gadmcmc {

inline constexpr double kDiagFloor = 1e-10;
inline constexpr double kDefaultRhoBeta = 0.02;

/// Everything the gradient-based adaptation carries between iterations.
struct AdaptationState {
  TriangularScale L;
  double beta = 1.0;
  Matrix G;  // RMSprop second moments, same shape as L
  Index iter = 0;
  double alpha_star = 0.25;
  double eta = 5e-5;
  double rho_beta = kDefaultRhoBeta;
  double diag_floor = kDiagFloor;
  bool adapting = true;

  static AdaptationState initial(TriangularScale L, double alpha_star, double eta,
                                 double rho_beta = kDefaultRhoBeta);
};

/// beta * diag(1 / L_ii): gradient of the entropy term.
Matrix entropy_gradient(const TriangularScale &L, double beta);

/// Stochastic gradient of the random-walk bound. Uses the outer product
/// [grad_y eps^T]_lower only when ev.log_ratio < 0.
Matrix gadrwm_gradient(const ProposalEvent &ev, const TriangularScale &L, double beta);

/// Langevin bound gradient with grad_y held constant in L:
/// [-(1/2) d ((1/2) L^T d + eps)^T]_lower with d = grad_x - grad_y.
Matrix gadmalaf_gradient(const ProposalEvent &ev, const TriangularScale &L, double beta);

/// Langevin bound gradient including the dependence of grad_y on L, through
/// one Hessian-vector product at y.
Matrix gadmalae_gradient(const ProposalEvent &ev, const TriangularScale &L, double beta,
                         const TargetModel &t);

/// G <- 0.9 G + 0.1 grad^2, then L <- L + eta / (1 + sqrt(G)) * grad
/// elementwise, then diag(L) clamped to diag_floor.
void rmsprop_step(AdaptationState &state, const Matrix &grad);

/// beta <- beta (1 + rho_beta (alpha_t - alpha_star)).
void update_beta(AdaptationState &state, bool accepted);

struct AdaptiveConfig {
  Index burn_in = 20000;
  Index samples = 20000;
  std::optional<double> eta;         // default by kind
  std::optional<double> alpha_star;  // default by kind
  double rho_beta = kDefaultRhoBeta;
  std::optional<TriangularScale> initial_scale;  // default diag(0.1 / sqrt(n))
  std::optional<VectorXd> initial_state;         // default N(0, I) from the run seed
  bool adapt = true;
  /// Called after every iteration with the iteration index and the state.
  std::function<void(Index, const AdaptationState &)> on_iteration;
};

double default_eta(SamplerKind kind);
double default_alpha_star(SamplerKind kind);
TriangularScale default_initial_scale(Index n);

struct AdaptiveRun {
  ChainTrace trace;
  AdaptationState state;
  RunSummary summary;
};

/// Runs burn-in (with adaptation of L and beta) followed by sampling under the
/// frozen kernel. Per iteration: draw eps, form y, take the RMSprop step on L,
/// accept or reject with the pre-step L, then adapt beta.
AdaptiveRun run_adaptive_chain(const TargetModel &t, SamplerKind kind,
                               const AdaptiveConfig &config, std::uint64_t seed);

}  // namespace gadmcmc

#endif  // GADMCMC_ADAPT_HPP
