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

#include "gadmcmc/adapt.hpp"

#include <chrono>
#include <cmath>
#include <utility>

#include "gadmcmc/errors.hpp"
#include "gadmcmc/rng.hpp"

namespace gadmcmc {

AdaptationState AdaptationState::initial(TriangularScale L, double alpha_star, double eta,
                                         double rho_beta) {
  AdaptationState s;
  s.G = Matrix::Zero(L.n(), L.n());
  s.L = std::move(L);
  s.alpha_star = alpha_star;
  s.eta = eta;
  s.rho_beta = rho_beta;
  return s;
}

Matrix entropy_gradient(const TriangularScale &L, double beta) {
  Matrix g = Matrix::Zero(L.n(), L.n());
  g.diagonal() = beta * L.diagonal().cwiseInverse();
  return g;
}

Matrix gadrwm_gradient(const ProposalEvent &ev, const TriangularScale &L, double beta) {
  Matrix g = entropy_gradient(L, beta);
  if (ev.log_ratio < 0.0) g += outer_lower(ev.grad_y, ev.eps);
  return g;
}

Matrix gadmalaf_gradient(const ProposalEvent &ev, const TriangularScale &L, double beta) {
  Matrix g = entropy_gradient(L, beta);
  if (ev.log_ratio < 0.0) {
    const VectorXd d = ev.grad_x - ev.grad_y;
    const VectorXd right = 0.5 * tri_transpose_matvec(L, d) + ev.eps;
    g += outer_lower(VectorXd(-0.5 * d), right);
  }
  return g;
}

Matrix gadmalae_gradient(const ProposalEvent &ev, const TriangularScale &L, double beta,
                         const TargetModel &t) {
  if (!t.has_hvp()) {
    throw UnsupportedOperationError("gadMALAe requires Hessian-vector products from " + t.name());
  }
  Matrix g = gadmalaf_gradient(ev, L, beta);
  if (ev.log_ratio < 0.0) {
    const VectorXd v = 0.5 * tri_transpose_matvec(L, VectorXd(ev.grad_x + ev.grad_y)) + ev.eps;
    const VectorXd h = t.hessian_vector_product(ev.y, tri_matvec(L, v));
    const VectorXd lt_gx = tri_transpose_matvec(L, ev.grad_x);
    const VectorXd lt_h = tri_transpose_matvec(L, h);
    // Landing on the lower triangle only, so accumulate lower outer products.
    g -= 0.25 * outer_lower(h, lt_gx);
    g -= 0.25 * outer_lower(ev.grad_x, lt_h);
    g -= 0.5 * outer_lower(h, ev.eps);
  }
  return g;
}

void rmsprop_step(AdaptationState &state, const Matrix &grad) {
  const Index n = state.L.n();
  if (grad.rows() != n || grad.cols() != n) {
    throw std::invalid_argument("rmsprop_step: gradient shape does not match L");
  }
  state.G = 0.9 * state.G + 0.1 * grad.cwiseAbs2();
  const Matrix step =
      (state.eta / (1.0 + state.G.array().sqrt())) * grad.array();
  state.L.add_lower(step);
  state.L.clamp_diagonal(state.diag_floor);
  ++state.iter;
}

void update_beta(AdaptationState &state, bool accepted) {
  const double alpha_t = accepted ? 1.0 : 0.0;
  state.beta *= 1.0 + state.rho_beta * (alpha_t - state.alpha_star);
}

double default_eta(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kGadRWM: return 5e-5;
    case SamplerKind::kGadMALAf:
    case SamplerKind::kGadMALAe: return 1.5e-4;
    default: break;
  }
  throw ConfigError("default_eta: " + to_string(kind) + " is not a gradient-adaptive sampler");
}

double default_alpha_star(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kGadRWM: return 0.25;
    case SamplerKind::kGadMALAf:
    case SamplerKind::kGadMALAe: return 0.55;
    case SamplerKind::kRWM: return 0.234;
    case SamplerKind::kMALA: return 0.574;
    case SamplerKind::kHMC: return 0.651;
    case SamplerKind::kAM: break;
  }
  throw ConfigError("default_alpha_star: no target rate for " + to_string(kind));
}

TriangularScale default_initial_scale(Index n) {
  return TriangularScale::scaled_identity(n, 0.1 / std::sqrt(static_cast<double>(n)));
}

AdaptiveRun run_adaptive_chain(const TargetModel &t, SamplerKind kind,
                               const AdaptiveConfig &config, std::uint64_t seed) {
  if (!is_gradient_adaptive(kind)) {
    throw ConfigError("run_adaptive_chain: " + to_string(kind) + " is not a gradient-adaptive sampler");
  }
  if (kind == SamplerKind::kGadMALAe && !t.has_hvp()) {
    throw ConfigError("gadMALAe requires a target with Hessian-vector products (" + t.name() + ")");
  }
  if (config.burn_in < 0 || config.samples < 10) {
    throw ConfigError("run_adaptive_chain: burn_in must be >= 0 and samples >= 10");
  }
  const double alpha_star = config.alpha_star.value_or(default_alpha_star(kind));
  const double eta = config.eta.value_or(default_eta(kind));
  if (!(alpha_star > 0.0 && alpha_star < 1.0)) throw ConfigError("alpha_star must lie in (0, 1)");
  if (!(eta > 0.0)) throw ConfigError("eta must be positive");
  if (!(config.rho_beta > 0.0) || config.rho_beta * std::max(alpha_star, 1.0 - alpha_star) >= 1.0) {
    throw ConfigError("rho_beta must be positive and keep beta positive");
  }

  const Index n = t.dim();
  TriangularScale L0 = config.initial_scale.value_or(default_initial_scale(n));
  if (L0.n() != n) throw ConfigError("initial_scale dimension does not match target");
  if (!L0.min_diagonal_positive()) throw ConfigError("initial_scale needs a positive diagonal");

  ChainRng rng(seed);
  VectorXd x = config.initial_state ? *config.initial_state : rng.standard_normal(n);
  if (x.size() != n) throw ConfigError("initial_state dimension does not match target");

  AdaptiveRun run;
  run.state = AdaptationState::initial(std::move(L0), alpha_star, eta, config.rho_beta);
  AdaptationState &state = run.state;
  ChainTrace &trace = run.trace;
  const Index total = config.burn_in + config.samples;
  trace.burn_in = config.burn_in;
  trace.states.resize(config.samples, n);
  trace.accept_flags.assign(static_cast<std::size_t>(total), 0);
  trace.log_target.resize(total);

  const bool langevin = kind != SamplerKind::kGadRWM;
  auto start = t.evaluate(x);
  double log_pi_x = start.log_density;
  VectorXd grad_x = std::move(start.gradient);

  const auto t0 = std::chrono::steady_clock::now();
  for (Index it = 0; it < total; ++it) {
    state.adapting = config.adapt && it < config.burn_in;
    VectorXd eps = rng.standard_normal(n);
    ProposalEvent ev = langevin ? propose_mala(t, x, log_pi_x, grad_x, state.L, std::move(eps))
                                : propose_rwm(t, x, log_pi_x, grad_x, state.L, std::move(eps));
    if (state.adapting) {
      Matrix grad;
      switch (kind) {
        case SamplerKind::kGadRWM: grad = gadrwm_gradient(ev, state.L, state.beta); break;
        case SamplerKind::kGadMALAf: grad = gadmalaf_gradient(ev, state.L, state.beta); break;
        default: grad = gadmalae_gradient(ev, state.L, state.beta, t); break;
      }
      rmsprop_step(state, grad);
    }
    ev.accepted = mh_accept(ev.log_ratio, rng.uniform());
    if (ev.accepted) {
      x = std::move(ev.y);
      grad_x = std::move(ev.grad_y);
      log_pi_x = ev.log_pi_y;
    }
    if (state.adapting) update_beta(state, ev.accepted);
    if (config.on_iteration) config.on_iteration(it, state);

    trace.accept_flags[static_cast<std::size_t>(it)] = ev.accepted ? 1 : 0;
    trace.log_target(it) = log_pi_x;
    if (it >= config.burn_in) trace.states.row(it - config.burn_in) = x.transpose();
  }
  state.adapting = false;
  trace.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  run.summary = summarize_run(trace);
  run.summary.seed = seed;
  run.summary.sampler = to_string(kind);
  run.summary.target = t.name();
  return run;
}

}  // namespace gadmcmc
