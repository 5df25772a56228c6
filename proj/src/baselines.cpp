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

#include "gadmcmc/baselines.hpp"

#include <chrono>
#include <cmath>
#include <utility>

#include "gadmcmc/adapt.hpp"
#include "gadmcmc/errors.hpp"
#include "gadmcmc/proposals.hpp"
#include "gadmcmc/rng.hpp"

namespace gadmcmc {

void am_update_with_rate(AmState &s, const VectorXd &x_new, double rho) {
  detail::require_size(x_new.size(), s.L.n(), "am_update");
  detail::require_size(s.mu.size(), s.L.n(), "am_update");
  s.mu += rho * (x_new - s.mu);
  const VectorXd z = forward_solve(s.L, VectorXd(x_new - s.mu));

  // (L [z z^T]_lower)_ij = z_j * sum_{k=j..i} L_ik z_k
  const Index n = s.L.n();
  Matrix step = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    double partial = 0.0;
    for (Index j = i; j >= 0; --j) {
      partial += s.L(i, j) * z(j);
      step(i, j) = rho * (z(j) * partial - s.L(i, j));
    }
  }
  s.L.add_lower(step);
  s.L.clamp_diagonal(s.diag_floor);
}

void am_update(AmState &s, const VectorXd &x_new) {
  am_update_with_rate(s, x_new, s.rate());
  ++s.t;
}

LeapfrogResult hmc_leapfrog(const TargetModel &t, const VectorXd &x, const VectorXd &p,
                            const HmcConfig &cfg) {
  return hmc_leapfrog(t, x, p, t.grad_log_density(x), cfg);
}

LeapfrogResult hmc_leapfrog(const TargetModel &t, const VectorXd &x, const VectorXd &p,
                            const VectorXd &grad_x, const HmcConfig &cfg) {
  detail::require_size(x.size(), t.dim(), "hmc_leapfrog");
  detail::require_size(p.size(), t.dim(), "hmc_leapfrog");
  if (!(cfg.step_size > 0.0) || cfg.leapfrog_steps < 1) {
    throw std::invalid_argument("hmc_leapfrog: step_size must be positive and steps >= 1");
  }
  const double h = cfg.step_size;
  LeapfrogResult out{x, p, grad_x, 0.0, false};
  double log_pi = 0.0;
  for (int step = 0; step < cfg.leapfrog_steps; ++step) {
    out.p += 0.5 * h * out.grad;
    out.x += h * out.p;
    auto eval = t.evaluate(out.x);
    out.grad = std::move(eval.gradient);
    log_pi = eval.log_density;
    out.p += 0.5 * h * out.grad;
    if (!std::isfinite(log_pi) || !out.grad.allFinite() || !out.p.allFinite()) {
      out.divergent = true;
      break;
    }
  }
  out.log_pi = log_pi;
  return out;
}

namespace {

struct ChainRecorder {
  ChainTrace &trace;
  Index burn_in;

  void record(Index it, bool accepted, double log_pi, const VectorXd &x) {
    trace.accept_flags[static_cast<std::size_t>(it)] = accepted ? 1 : 0;
    trace.log_target(it) = log_pi;
    if (it >= burn_in) trace.states.row(it - burn_in) = x.transpose();
  }
};

}  // namespace

BaselineRun run_baseline_chain(const TargetModel &t, SamplerKind kind,
                               const BaselineConfig &config, std::uint64_t seed) {
  if (is_gradient_adaptive(kind)) {
    throw ConfigError("run_baseline_chain: " + to_string(kind) + " is not a baseline sampler");
  }
  if (config.burn_in < 0 || config.samples < 10) {
    throw ConfigError("run_baseline_chain: burn_in must be >= 0 and samples >= 10");
  }
  if (kind == SamplerKind::kHMC && config.leapfrog_steps < 1) {
    throw ConfigError("HMC needs at least one leapfrog step");
  }
  const Index n = t.dim();
  const double alpha_star =
      kind == SamplerKind::kAM ? 0.0 : config.alpha_star.value_or(default_alpha_star(kind));
  if (kind != SamplerKind::kAM && !(alpha_star > 0.0 && alpha_star < 1.0)) {
    throw ConfigError("alpha_star must lie in (0, 1)");
  }
  const double sigma0 = config.initial_sigma.value_or(0.1 / std::sqrt(static_cast<double>(n)));
  if (!(sigma0 > 0.0)) throw ConfigError("initial_sigma must be positive");

  ChainRng rng(seed);
  VectorXd x = config.initial_state ? *config.initial_state : rng.standard_normal(n);
  if (x.size() != n) throw ConfigError("initial_state dimension does not match target");

  BaselineRun run;
  ChainTrace &trace = run.trace;
  const Index total = config.burn_in + config.samples;
  trace.burn_in = config.burn_in;
  trace.states.resize(config.samples, n);
  trace.accept_flags.assign(static_cast<std::size_t>(total), 0);
  trace.log_target.resize(total);
  ChainRecorder recorder{trace, config.burn_in};

  auto start = t.evaluate(x);
  double log_pi_x = start.log_density;
  VectorXd grad_x = std::move(start.gradient);
  double log_sigma = std::log(sigma0);

  AmState am;
  if (kind == SamplerKind::kAM) {
    am.mu = x;
    am.L = config.initial_scale.value_or(default_initial_scale(n));
    if (am.L.n() != n) throw ConfigError("initial_scale dimension does not match target");
    am.base_rate = config.am_base_rate;
    am.horizon = config.am_horizon;
  }
  TriangularScale scale = TriangularScale::scaled_identity(n, sigma0);

  const auto t0 = std::chrono::steady_clock::now();
  for (Index it = 0; it < total; ++it) {
    const bool adapting = config.adapt && it < config.burn_in;
    bool accepted = false;
    switch (kind) {
      case SamplerKind::kRWM:
      case SamplerKind::kMALA: {
        VectorXd eps = rng.standard_normal(n);
        ProposalEvent ev = kind == SamplerKind::kRWM
                               ? propose_rwm(t, x, log_pi_x, grad_x, scale, std::move(eps))
                               : propose_mala(t, x, log_pi_x, grad_x, scale, std::move(eps));
        accepted = mh_accept(ev.log_ratio, rng.uniform());
        if (accepted) {
          x = std::move(ev.y);
          grad_x = std::move(ev.grad_y);
          log_pi_x = ev.log_pi_y;
        }
        if (adapting) {
          log_sigma = scalar_step_adapt(log_sigma, accepted, alpha_star, config.step_rate);
          scale = TriangularScale::scaled_identity(n, std::exp(log_sigma));
        }
        break;
      }
      case SamplerKind::kAM: {
        VectorXd eps = rng.standard_normal(n);
        ProposalEvent ev = propose_rwm(t, x, log_pi_x, grad_x, am.L, std::move(eps));
        accepted = mh_accept(ev.log_ratio, rng.uniform());
        if (accepted) {
          x = std::move(ev.y);
          grad_x = std::move(ev.grad_y);
          log_pi_x = ev.log_pi_y;
        }
        if (adapting) am_update(am, x);
        break;
      }
      case SamplerKind::kHMC: {
        const VectorXd p = rng.standard_normal(n);
        const HmcConfig cfg{config.leapfrog_steps, std::exp(log_sigma)};
        LeapfrogResult lf = hmc_leapfrog(t, x, p, grad_x, cfg);
        const double u = rng.uniform();
        if (!lf.divergent) {
          const double log_ratio =
              (lf.log_pi - 0.5 * lf.p.squaredNorm()) - (log_pi_x - 0.5 * p.squaredNorm());
          accepted = mh_accept(log_ratio, u);
        }
        if (accepted) {
          x = std::move(lf.x);
          grad_x = std::move(lf.grad);
          log_pi_x = lf.log_pi;
        }
        if (adapting) {
          log_sigma = scalar_step_adapt(log_sigma, accepted, alpha_star, config.step_rate);
        }
        break;
      }
      default: break;
    }
    recorder.record(it, accepted, log_pi_x, x);
  }
  trace.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  run.scale = kind == SamplerKind::kAM ? am.L : scale;
  run.step_size = std::exp(log_sigma);
  run.summary = summarize_run(trace);
  run.summary.seed = seed;
  run.summary.sampler = to_string(kind);
  run.summary.target = t.name();
  return run;
}

}  // namespace gadmcmc
