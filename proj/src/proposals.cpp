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

#include "gadmcmc/proposals.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace gadmcmc {

VectorXd rwm_transform(const VectorXd &x, const TriangularScale &L, const VectorXd &eps) {
  detail::require_size(x.size(), L.n(), "rwm_transform");
  return x + tri_matvec(L, eps);
}

VectorXd mala_transform(const VectorXd &x, const TriangularScale &L, const VectorXd &grad_x,
                        const VectorXd &eps) {
  detail::require_size(x.size(), L.n(), "mala_transform");
  detail::require_size(grad_x.size(), L.n(), "mala_transform");
  detail::require_size(eps.size(), L.n(), "mala_transform");
  // One matvec with L after combining (1/2) L^T g and eps.
  const VectorXd inner = 0.5 * tri_transpose_matvec(L, grad_x) + eps;
  return x + tri_matvec(L, inner);
}

double mala_log_q(const VectorXd &from, const VectorXd &to, const TriangularScale &L,
                  const VectorXd &grad_from) {
  detail::require_size(from.size(), L.n(), "mala_log_q");
  detail::require_size(to.size(), L.n(), "mala_log_q");
  detail::require_size(grad_from.size(), L.n(), "mala_log_q");
  // to - mean = L z with z = L^{-1}(to - from) - (1/2) L^T grad_from.
  const VectorXd z = forward_solve(L, VectorXd(to - from)) - 0.5 * tri_transpose_matvec(L, grad_from);
  const double n = static_cast<double>(L.n());
  return -0.5 * n * std::log(2.0 * std::numbers::pi) - log_det_tri(L) - 0.5 * z.squaredNorm();
}

double gaussian_entropy(const TriangularScale &L) {
  const double n = static_cast<double>(L.n());
  return 0.5 * n * (1.0 + std::log(2.0 * std::numbers::pi)) + log_det_tri(L);
}

double mala_proposal_log_ratio(const TriangularScale &L, const VectorXd &grad_x,
                               const VectorXd &grad_y, const VectorXd &eps) {
  const VectorXd v = 0.5 * tri_transpose_matvec(L, VectorXd(grad_x + grad_y)) + eps;
  return -0.5 * (v.squaredNorm() - eps.squaredNorm());
}

double log_mh_ratio_rwm(const TargetModel &t, const ProposalEvent &ev) {
  return t.log_density(ev.y) - t.log_density(ev.x);
}

double log_mh_ratio_mala(const TargetModel &t, const TriangularScale &L, const ProposalEvent &ev) {
  return t.log_density(ev.y) - t.log_density(ev.x) +
         mala_proposal_log_ratio(L, ev.grad_x, ev.grad_y, ev.eps);
}

ProposalEvent propose_rwm(const TargetModel &t, const VectorXd &x, double log_pi_x,
                          const VectorXd &grad_x, const TriangularScale &L, VectorXd eps) {
  ProposalEvent ev;
  ev.y = rwm_transform(x, L, eps);
  auto at_y = t.evaluate(ev.y);
  ev.x = x;
  ev.eps = std::move(eps);
  ev.grad_x = grad_x;
  ev.grad_y = std::move(at_y.gradient);
  ev.log_pi_x = log_pi_x;
  ev.log_pi_y = at_y.log_density;
  ev.log_ratio = ev.log_pi_y - ev.log_pi_x;
  return ev;
}

ProposalEvent propose_mala(const TargetModel &t, const VectorXd &x, double log_pi_x,
                           const VectorXd &grad_x, const TriangularScale &L, VectorXd eps) {
  ProposalEvent ev;
  ev.y = mala_transform(x, L, grad_x, eps);
  auto at_y = t.evaluate(ev.y);
  ev.x = x;
  ev.eps = std::move(eps);
  ev.grad_x = grad_x;
  ev.grad_y = std::move(at_y.gradient);
  ev.log_pi_x = log_pi_x;
  ev.log_pi_y = at_y.log_density;
  ev.log_ratio =
      ev.log_pi_y - ev.log_pi_x + mala_proposal_log_ratio(L, ev.grad_x, ev.grad_y, ev.eps);
  return ev;
}

}  // namespace gadmcmc
