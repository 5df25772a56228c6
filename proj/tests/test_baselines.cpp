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

#include <cmath>
#include <numeric>
#include <random>

#include <doctest.h>

#include "gadmcmc/baselines.hpp"
#include "gadmcmc/errors.hpp"
#include "oracles.hpp"

using namespace gadmcmc;

namespace {

VectorXd vec(std::initializer_list<double> v) {
  VectorXd out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

double hamiltonian(const TargetModel &t, const VectorXd &x, const VectorXd &p) {
  return -t.log_density(x) + 0.5 * p.squaredNorm();
}

}  // namespace

TEST_CASE("am_update: hand value and trivial steps") {
  AmState s{vec({0.0}), TriangularScale::identity(1)};
  am_update_with_rate(s, vec({1.0}), 0.5);
  CHECK(s.mu(0) == 0.5);
  CHECK(s.L(0, 0) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(s.t == 0);

  std::mt19937_64 rng(1);
  Matrix Lm = oracle::random_lower(rng, 4, 0.5, 1.5);
  AmState frozen{oracle::randn(rng, 4), TriangularScale(Lm)};
  const AmState copy = frozen;
  am_update_with_rate(frozen, oracle::randn(rng, 4), 0.0);
  CHECK(frozen.mu == copy.mu);
  CHECK(frozen.L == copy.L);

  AmState shrink = copy;
  am_update_with_rate(shrink, copy.mu, 0.2);
  CHECK(shrink.mu == copy.mu);
  CHECK((shrink.L.matrix() - 0.8 * copy.L.matrix()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("am_update: rate schedule and argument checks") {
  AmState s{VectorXd::Zero(2), TriangularScale::identity(2)};
  CHECK(s.rate() == 0.001);
  s.t = 4000;
  CHECK(s.rate() == 0.0005);
  am_update(s, vec({0.1, 0.2}));
  CHECK(s.t == 4001);
  CHECK_THROWS_AS(am_update(s, vec({1.0})), std::invalid_argument);
  Matrix singular = Matrix::Identity(2, 2);
  singular(1, 1) = 0.0;
  AmState bad{VectorXd::Zero(2), TriangularScale(singular)};
  CHECK_THROWS_AS(am_update(bad, vec({1.0, 1.0})), SingularMatrixError);
}

TEST_CASE("am_update: matches the dense formula") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + trial % 6;
    const Matrix Lm = oracle::random_lower(rng, n, 0.5, 1.5);
    const VectorXd mu = oracle::randn(rng, n), x = oracle::randn(rng, n);
    AmState s{mu, TriangularScale(Lm)};
    am_update_with_rate(s, x, 0.3);
    const VectorXd mu2 = mu + 0.3 * (x - mu);
    const VectorXd z = Lm.inverse() * (x - mu2);
    const Matrix zz = z * z.transpose();
    const Matrix bracket = Matrix(zz.triangularView<Eigen::Lower>()) - Matrix::Identity(n, n);
    const Matrix want = Lm + 0.3 * Lm * bracket;
    CHECK((s.L.matrix() - want).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("am_update: zero expected direction at stationarity") {
  std::mt19937_64 rng(3);
  const Index n = 3;
  const Matrix Lm = oracle::random_lower(rng, n, 0.5, 1.5);
  const VectorXd mu = oracle::randn(rng, n);
  const double rho = 1e-4;
  const int draws = 100000;
  Matrix sum = Matrix::Zero(n, n), sum2 = Matrix::Zero(n, n);
  for (int i = 0; i < draws; ++i) {
    AmState s{mu, TriangularScale(Lm)};
    const VectorXd x = mu + Lm * oracle::randn(rng, n);
    am_update_with_rate(s, x, rho);
    const Matrix d = (s.L.matrix() - Lm) / rho;
    sum += d;
    sum2 += d.cwiseProduct(d);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) {
      const double mean = sum(i, j) / draws;
      const double se = std::sqrt((sum2(i, j) / draws - mean * mean) / draws);
      CHECK(std::abs(mean) <= 3.0 * se);
    }
  }
}

TEST_CASE("scalar_step_adapt") {
  CHECK(scalar_step_adapt(0.0, true, 0.234) == doctest::Approx(0.01532).epsilon(1e-12));
  CHECK(scalar_step_adapt(0.0, false, 0.234) == doctest::Approx(-0.00468).epsilon(1e-12));
  CHECK(scalar_step_adapt(1.0, true, 0.5, 0.1) == doctest::Approx(1.05));
}

TEST_CASE("scalar controllers reach their target acceptance on a standard normal") {
  const TargetPtr t = make_diagonal_gaussian(VectorXd::Ones(5));
  for (auto [kind, alpha] : {std::pair{SamplerKind::kRWM, 0.234}, {SamplerKind::kMALA, 0.574},
                             {SamplerKind::kHMC, 0.651}}) {
    CAPTURE(to_string(kind));
    BaselineConfig cfg;
    cfg.burn_in = 20000;
    cfg.samples = 20000;
    const auto run = run_baseline_chain(*t, kind, cfg, 11);
    const auto &f = run.trace.accept_flags;
    const double adaptive = std::accumulate(f.begin() + 10000, f.begin() + 20000, 0.0) / 10000.0;
    CHECK(std::abs(adaptive - alpha) <= 0.05);
    CHECK(run.step_size > 0.0);
  }
}

TEST_CASE("hmc_leapfrog: hand values") {
  const TargetPtr t = make_diagonal_gaussian(VectorXd::Ones(1));
  const auto r = hmc_leapfrog(*t, vec({1.0}), vec({0.0}), HmcConfig{1, 1.0});
  CHECK(r.x(0) == 0.5);
  CHECK(r.p(0) == -0.75);
  CHECK(r.grad(0) == -0.5);
  CHECK(r.log_pi == doctest::Approx(t->log_density(vec({0.5}))));
  CHECK_FALSE(r.divergent);
  CHECK_THROWS_AS(hmc_leapfrog(*t, vec({1.0}), vec({0.0}), HmcConfig{1, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("hmc_leapfrog: reversibility") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const TargetPtr t = oracle::random_gaussian(rng, 4);
    const VectorXd x = oracle::randn(rng, 4), p = oracle::randn(rng, 4);
    const HmcConfig cfg{20, 0.05};
    const auto fwd = hmc_leapfrog(*t, x, p, cfg);
    const auto back = hmc_leapfrog(*t, fwd.x, -fwd.p, cfg);
    CHECK((back.x - x).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((back.p + p).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("hmc_leapfrog: energy error shrinks with the square of the step") {
  const TargetPtr t = make_diagonal_gaussian(vec({0.5, 1.0, 2.0}));
  const VectorXd x = vec({0.4, -1.0, 1.5}), p = vec({1.0, 0.3, -0.7});
  const double h0 = hamiltonian(*t, x, p);
  std::vector<double> errors;
  for (double h : {0.04, 0.02, 0.01}) {
    const int steps = static_cast<int>(std::lround(0.8 / h));
    const auto r = hmc_leapfrog(*t, x, p, HmcConfig{steps, h});
    errors.push_back(std::abs(hamiltonian(*t, r.x, r.p) - h0));
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
  }
}

TEST_CASE("hmc_leapfrog: non-finite trajectories are flagged") {
  struct Explosive final : TargetModel {
    Index dim() const override { return 1; }
    std::string name() const override { return "explosive"; }
    double do_log_density(VectorRef x) const override { return std::pow(x(0), 8); }
    VectorXd do_gradient(VectorRef x) const override {
      return VectorXd::Constant(1, 8.0 * std::pow(x(0), 7));
    }
  } t;
  const auto r = hmc_leapfrog(t, vec({3.0}), vec({0.0}), HmcConfig{20, 0.5});
  CHECK(r.divergent);
}

TEST_CASE("baselines recover the mean of a 5-d standard normal") {
  const TargetPtr t = make_diagonal_gaussian(VectorXd::Ones(5));
  for (auto kind : {SamplerKind::kRWM, SamplerKind::kMALA, SamplerKind::kAM, SamplerKind::kHMC}) {
    CAPTURE(to_string(kind));
    BaselineConfig cfg;
    cfg.burn_in = 20000;
    cfg.samples = 20000;
    const auto run = run_baseline_chain(*t, kind, cfg, 21);
    CHECK(run.trace.states.rows() == 20000);
    CHECK(run.trace.accept_flags.size() == 40000);
    for (Index j = 0; j < 5; ++j) {
      const VectorXd col = run.trace.states.col(j);
      const double mean = col.mean();
      const double var = (col.array() - mean).square().mean();
      const double n_eff = ess({col.data(), static_cast<std::size_t>(col.size())});
      CHECK(std::abs(mean) <= 3.0 * std::sqrt(var / n_eff));
    }
  }
}

TEST_CASE("AM learns the correlation of a 2-d Gaussian") {
  const TargetPtr t = make_correlated_gaussian_2d(0.99);
  BaselineConfig cfg;
  cfg.burn_in = 20000;
  cfg.samples = 100;
  const auto run = run_baseline_chain(*t, SamplerKind::kAM, cfg, 31);
  const Matrix c = run.scale.covariance();
  const double corr = c(1, 0) / std::sqrt(c(0, 0) * c(1, 1));
  CAPTURE(c);
  CHECK(corr >= 0.9);
}

TEST_CASE("fixed-kernel baselines leave a Gaussian invariant") {
  const TargetPtr t = make_diagonal_gaussian(vec({0.8, 1.0}));
  for (auto kind : {SamplerKind::kRWM, SamplerKind::kMALA, SamplerKind::kHMC}) {
    CAPTURE(to_string(kind));
    BaselineConfig cfg;
    cfg.burn_in = 100;
    cfg.samples = 1000000;
    cfg.adapt = false;
    cfg.initial_sigma = kind == SamplerKind::kHMC ? 0.3 : 1.2;
    cfg.leapfrog_steps = 3;
    const auto run = run_baseline_chain(*t, kind, cfg, 41);
    for (Index j = 0; j < 2; ++j) {
      const VectorXd col = run.trace.states.col(j);
      const double mean = col.mean();
      const double var = (col.array() - mean).square().mean();
      const double want = j == 0 ? 0.64 : 1.0;
      const double n_eff = ess({col.data(), static_cast<std::size_t>(col.size())});
      CHECK(std::abs(mean) <= 3.0 * std::sqrt(var / n_eff));
      CHECK(std::abs(var / want - 1.0) <= 0.05);
    }
  }
}

TEST_CASE("baseline chains are deterministic for a fixed seed") {
  const TargetPtr t = make_neal_gaussian(4);
  BaselineConfig cfg;
  cfg.burn_in = 500;
  cfg.samples = 200;
  for (auto kind : {SamplerKind::kRWM, SamplerKind::kMALA, SamplerKind::kAM, SamplerKind::kHMC}) {
    const auto a = run_baseline_chain(*t, kind, cfg, 5);
    const auto b = run_baseline_chain(*t, kind, cfg, 5);
    CHECK(a.trace.states == b.trace.states);
    CHECK(a.step_size == b.step_size);
    CHECK(a.scale == b.scale);
  }
  CHECK_THROWS_AS(run_baseline_chain(*t, SamplerKind::kGadRWM, cfg, 5), ConfigError);
}
