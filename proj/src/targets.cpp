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

#include "gadmcmc/targets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Cholesky>

#include "gadmcmc/errors.hpp"

namespace gadmcmc {

double TargetModel::log_density(VectorRef x) const {
  detail::require_size(x.size(), dim(), "log_density");
  return do_log_density(x);
}

VectorXd TargetModel::grad_log_density(VectorRef x) const {
  detail::require_size(x.size(), dim(), "grad_log_density");
  return do_gradient(x);
}

DensityAndGradient TargetModel::evaluate(VectorRef x) const {
  detail::require_size(x.size(), dim(), "evaluate");
  return do_evaluate(x);
}

VectorXd TargetModel::hessian_vector_product(VectorRef x, VectorRef v) const {
  if (!has_hvp()) {
    throw UnsupportedOperationError(name() + ": Hessian-vector products not available");
  }
  detail::require_size(x.size(), dim(), "hessian_vector_product");
  detail::require_size(v.size(), dim(), "hessian_vector_product");
  return do_hvp(x, v);
}

VectorXd TargetModel::do_hvp(VectorRef, VectorRef) const {
  throw UnsupportedOperationError(name() + ": Hessian-vector products not available");
}

// ---------------------------------------------------------------------------

GaussianTarget GaussianTarget::diagonal(VectorXd stds, std::string name) {
  if (stds.size() == 0) throw std::invalid_argument("GaussianTarget: empty stds");
  if (!(stds.array() > 0.0).all()) {
    throw std::invalid_argument("GaussianTarget: stds must be positive");
  }
  GaussianTarget t;
  t.dim_ = stds.size();
  t.name_ = std::move(name);
  t.is_diagonal_ = true;
  t.inv_variances_ = stds.array().square().inverse();
  t.covariance_ = stds.array().square().matrix().asDiagonal();
  t.precision_ = t.inv_variances_.asDiagonal();
  t.log_normaliser_ = -0.5 * static_cast<double>(t.dim_) * std::log(2.0 * std::numbers::pi) -
                      stds.array().log().sum();
  t.stds_ = std::move(stds);
  return t;
}

GaussianTarget GaussianTarget::dense(const Eigen::MatrixXd &covariance, std::string name) {
  if (covariance.rows() != covariance.cols() || covariance.rows() == 0) {
    throw std::invalid_argument("GaussianTarget: covariance must be square and non-empty");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(covariance);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("GaussianTarget: covariance is not positive definite");
  }
  GaussianTarget t;
  t.dim_ = covariance.rows();
  t.name_ = std::move(name);
  t.covariance_ = covariance;
  t.precision_ = llt.solve(Eigen::MatrixXd::Identity(t.dim_, t.dim_));
  t.precision_ = 0.5 * (t.precision_ + t.precision_.transpose()).eval();
  const Eigen::MatrixXd chol = llt.matrixL();
  t.log_normaliser_ = -0.5 * static_cast<double>(t.dim_) * std::log(2.0 * std::numbers::pi) -
                      chol.diagonal().array().log().sum();
  t.stds_ = covariance.diagonal().array().sqrt();
  return t;
}

VectorXd GaussianTarget::apply_precision(VectorRef x) const {
  if (is_diagonal_) return inv_variances_.cwiseProduct(x);
  return precision_ * x;
}

double GaussianTarget::do_log_density(VectorRef x) const {
  return log_normaliser_ - 0.5 * x.dot(apply_precision(x));
}

VectorXd GaussianTarget::do_gradient(VectorRef x) const { return -apply_precision(x); }

DensityAndGradient GaussianTarget::do_evaluate(VectorRef x) const {
  VectorXd px = apply_precision(x);
  const double lp = log_normaliser_ - 0.5 * x.dot(px);
  return {lp, -px};
}

VectorXd GaussianTarget::do_hvp(VectorRef, VectorRef v) const { return -apply_precision(v); }

// ---------------------------------------------------------------------------

double log_sigmoid(double z) {
  if (z >= 0.0) return -std::log1p(std::exp(-z));
  return z - std::log1p(std::exp(z));
}

namespace {
double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}
}  // namespace

LogisticRegressionTarget::LogisticRegressionTarget(ClassificationDataset data,
                                                   double prior_variance, std::string name)
    : data_(std::move(data)), prior_variance_(prior_variance), name_(std::move(name)) {
  if (data_.features.rows() == 0 || data_.features.cols() == 0) {
    throw std::invalid_argument("LogisticRegressionTarget: empty dataset");
  }
  if (data_.labels.size() != data_.features.rows()) {
    throw std::invalid_argument("LogisticRegressionTarget: label count does not match rows");
  }
  if (!(prior_variance > 0.0)) {
    throw std::invalid_argument("LogisticRegressionTarget: prior variance must be positive");
  }
}

double LogisticRegressionTarget::do_log_density(VectorRef w) const {
  const VectorXd z = data_.features * w;
  double ll = 0.0;
  for (Index i = 0; i < z.size(); ++i) {
    ll += data_.labels(i) > 0.5 ? log_sigmoid(z(i)) : log_sigmoid(-z(i));
  }
  return ll - 0.5 * w.squaredNorm() / prior_variance_;
}

VectorXd LogisticRegressionTarget::do_gradient(VectorRef w) const {
  return do_evaluate(w).gradient;
}

DensityAndGradient LogisticRegressionTarget::do_evaluate(VectorRef w) const {
  const VectorXd z = data_.features * w;
  VectorXd residual(z.size());
  double ll = 0.0;
  for (Index i = 0; i < z.size(); ++i) {
    const bool positive = data_.labels(i) > 0.5;
    ll += positive ? log_sigmoid(z(i)) : log_sigmoid(-z(i));
    residual(i) = data_.labels(i) - sigmoid(z(i));
  }
  VectorXd grad = data_.features.transpose() * residual - w / prior_variance_;
  return {ll - 0.5 * w.squaredNorm() / prior_variance_, std::move(grad)};
}

VectorXd LogisticRegressionTarget::do_hvp(VectorRef w, VectorRef v) const {
  const VectorXd z = data_.features * w;
  VectorXd sv = data_.features * v;
  for (Index i = 0; i < z.size(); ++i) {
    const double s = sigmoid(z(i));
    sv(i) *= s * (1.0 - s);
  }
  return -(data_.features.transpose() * sv) - v / prior_variance_;
}

// ---------------------------------------------------------------------------

VectorXd neal_stds(Index n) {
  if (n < 1) throw std::invalid_argument("neal_stds: n must be >= 1");
  if (n == 1) return VectorXd::Constant(1, 0.01);
  return VectorXd::LinSpaced(n, 0.01, 1.0);
}

TargetPtr make_neal_gaussian(Index n) {
  return std::make_shared<GaussianTarget>(
      GaussianTarget::diagonal(neal_stds(n), "neal_gaussian_" + std::to_string(n)));
}

TargetPtr make_diagonal_gaussian(const VectorXd &stds) {
  return std::make_shared<GaussianTarget>(GaussianTarget::diagonal(stds));
}

TargetPtr make_gaussian(const Eigen::MatrixXd &covariance, std::string name) {
  return std::make_shared<GaussianTarget>(GaussianTarget::dense(covariance, std::move(name)));
}

TargetPtr make_correlated_gaussian_2d(double rho) {
  if (!(std::abs(rho) < 1.0)) {
    throw std::invalid_argument("make_correlated_gaussian_2d: |rho| must be < 1");
  }
  Eigen::MatrixXd cov(2, 2);
  cov << 1.0, rho, rho, 1.0;
  return make_gaussian(cov, "correlated_gaussian_2d");
}

Eigen::MatrixXd kernel_covariance(Index grid_points, double low, double high) {
  if (grid_points < 2) {
    throw std::invalid_argument("kernel_covariance: need at least 2 grid points");
  }
  if (!(high > low)) throw std::invalid_argument("kernel_covariance: empty range");
  const VectorXd grid = VectorXd::LinSpaced(grid_points, low, high);
  Eigen::MatrixXd k(grid_points, grid_points);
  for (Index i = 0; i < grid_points; ++i) {
    for (Index j = 0; j < grid_points; ++j) {
      const double d = grid(i) - grid(j);
      k(i, j) = std::exp(-0.5 * d * d / 0.16) + (i == j ? 0.01 : 0.0);
    }
  }
  return k;
}

TargetPtr make_kernel_gaussian(Index grid_points, double low, double high) {
  return make_gaussian(kernel_covariance(grid_points, low, high),
                       "kernel_gaussian_" + std::to_string(grid_points));
}

TargetPtr make_logistic_regression(ClassificationDataset data, double prior_variance) {
  return std::make_shared<LogisticRegressionTarget>(std::move(data), prior_variance);
}

}  // namespace gadmcmc
