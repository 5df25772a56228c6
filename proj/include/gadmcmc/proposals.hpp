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

#ifndef GADMCMC_PROPOSALS_HPP
#define GADMCMC_PROPOSALS_HPP

#include "gadmcmc/linalg.hpp"
#include "gadmcmc/targets.hpp"

namespace gadmcmc {

/// One Metropolis-Hastings iteration: current state, noise, proposal and the
/// cached target evaluations at both ends.
struct ProposalEvent {
  VectorXd x;
  VectorXd eps;
  VectorXd y;
  VectorXd grad_x;
  VectorXd grad_y;
  double log_pi_x = 0.0;
  double log_pi_y = 0.0;
  double log_ratio = 0.0;
  bool accepted = false;
};

/// x + L eps.
VectorXd rwm_transform(const VectorXd &x, const TriangularScale &L, const VectorXd &eps);

/// x + (1/2) L L^T grad_x + L eps, via two triangular products.
VectorXd mala_transform(const VectorXd &x, const TriangularScale &L, const VectorXd &grad_x,
                        const VectorXd &eps);

/// log N(to | from + (1/2) L L^T grad_from, L L^T), normalising constant included.
double mala_log_q(const VectorXd &from, const VectorXd &to, const TriangularScale &L,
                  const VectorXd &grad_from);

/// Differential entropy of N(., L L^T).
double gaussian_entropy(const TriangularScale &L);

/// -(1/2) (|(1/2) L^T (grad_x + grad_y) + eps|^2 - |eps|^2), the proposal part
/// of the preconditioned-Langevin log ratio.
double mala_proposal_log_ratio(const TriangularScale &L, const VectorXd &grad_x,
                               const VectorXd &grad_y, const VectorXd &eps);

/// log pi(y) - log pi(x), evaluating the target.
double log_mh_ratio_rwm(const TargetModel &t, const ProposalEvent &ev);

/// log pi(y) - log pi(x) + mala_proposal_log_ratio, evaluating the target.
double log_mh_ratio_mala(const TargetModel &t, const TriangularScale &L, const ProposalEvent &ev);

/// Builds a random-walk event from x (whose log density and gradient are
/// already known), evaluating the target once at y.
ProposalEvent propose_rwm(const TargetModel &t, const VectorXd &x, double log_pi_x,
                          const VectorXd &grad_x, const TriangularScale &L, VectorXd eps);

/// Same as propose_rwm for the preconditioned Langevin kernel.
ProposalEvent propose_mala(const TargetModel &t, const VectorXd &x, double log_pi_x,
                           const VectorXd &grad_x, const TriangularScale &L, VectorXd eps);

/// Accept iff log u < log_ratio.
inline bool mh_accept(double log_ratio, double u) { return std::log(u) < log_ratio; }

}  // namespace gadmcmc

#endif  // GADMCMC_PROPOSALS_HPP
