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

#ifndef GADMCMC_TARGETS_HPP
#define GADMCMC_TARGETS_HPP

#include <memory>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "gadmcmc/dataset.hpp"
#include "gadmcmc/linalg.hpp"

namespace gadmcmc {

using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

struct DensityAndGradient {
  double log_density;
  VectorXd gradient;
};

/// Unnormalised target density pi(x) on R^n.
///
/// Instances are immutable after construction, so one model may be shared by
/// concurrently running chains. The additive constant of log_density is fixed
/// per instance.
class TargetModel {
 public:
  virtual ~TargetModel() = default;

  virtual Index dim() const = 0;
  virtual std::string name() const = 0;
  virtual bool has_hvp() const { return false; }
  /// Marginal standard deviations, when the target exposes them in closed form.
  virtual std::optional<VectorXd> marginal_stds() const { return std::nullopt; }

  double log_density(VectorRef x) const;
  VectorXd grad_log_density(VectorRef x) const;
  DensityAndGradient evaluate(VectorRef x) const;
  /// [grad grad log pi(x)] v. Throws UnsupportedOperationError without HVP support.
  VectorXd hessian_vector_product(VectorRef x, VectorRef v) const;

 protected:
  virtual double do_log_density(VectorRef x) const = 0;
  virtual VectorXd do_gradient(VectorRef x) const = 0;
  virtual DensityAndGradient do_evaluate(VectorRef x) const {
    return {do_log_density(x), do_gradient(x)};
  }
  virtual VectorXd do_hvp(VectorRef x, VectorRef v) const;
};

using TargetPtr = std::shared_ptr<const TargetModel>;

/// Zero-mean Gaussian, either diagonal or with a dense covariance. The
/// normalising constant is included.
class GaussianTarget final : public TargetModel {
 public:
  static GaussianTarget diagonal(VectorXd stds, std::string name = "diagonal_gaussian");
  static GaussianTarget dense(const Eigen::MatrixXd &covariance,
                              std::string name = "gaussian");

  Index dim() const override { return dim_; }
  std::string name() const override { return name_; }
  bool has_hvp() const override { return true; }
  std::optional<VectorXd> marginal_stds() const override { return stds_; }

  const Eigen::MatrixXd &covariance() const { return covariance_; }
  const Eigen::MatrixXd &precision() const { return precision_; }

 protected:
  double do_log_density(VectorRef x) const override;
  VectorXd do_gradient(VectorRef x) const override;
  DensityAndGradient do_evaluate(VectorRef x) const override;
  VectorXd do_hvp(VectorRef x, VectorRef v) const override;

 private:
  GaussianTarget() = default;
  VectorXd apply_precision(VectorRef x) const;

  Index dim_ = 0;
  std::string name_;
  bool is_diagonal_ = false;
  VectorXd inv_variances_;  // diagonal case
  Eigen::MatrixXd covariance_;
  Eigen::MatrixXd precision_;
  VectorXd stds_;
  double log_normaliser_ = 0.0;
};

/// Bernoulli-logit likelihood with an isotropic Gaussian prior on the weights.
/// Additive constants are dropped.
class LogisticRegressionTarget final : public TargetModel {
 public:
  LogisticRegressionTarget(ClassificationDataset data, double prior_variance,
                           std::string name = "logistic_regression");

  Index dim() const override { return data_.features.cols(); }
  std::string name() const override { return name_; }
  bool has_hvp() const override { return true; }
  double prior_variance() const { return prior_variance_; }
  const ClassificationDataset &data() const { return data_; }

 protected:
  double do_log_density(VectorRef w) const override;
  VectorXd do_gradient(VectorRef w) const override;
  DensityAndGradient do_evaluate(VectorRef w) const override;
  VectorXd do_hvp(VectorRef w, VectorRef v) const override;

 private:
  ClassificationDataset data_;
  double prior_variance_;
  std::string name_;
};

/// log sigma(z), stable for large |z|.
double log_sigmoid(double z);

/// Stds on the linear grid 0.01 .. 1 over n points (n = 100 gives step 0.01).
VectorXd neal_stds(Index n);
TargetPtr make_neal_gaussian(Index n);
TargetPtr make_diagonal_gaussian(const VectorXd &stds);
TargetPtr make_gaussian(const Eigen::MatrixXd &covariance, std::string name = "gaussian");
/// [[1, rho], [rho, 1]].
TargetPtr make_correlated_gaussian_2d(double rho = 0.99);
/// Squared-exponential kernel exp(-(a-b)^2 / (2 * 0.16)) + 0.01 on a regular grid.
Eigen::MatrixXd kernel_covariance(Index grid_points, double low, double high);
TargetPtr make_kernel_gaussian(Index grid_points = 51, double low = 0.0, double high = 4.0);
TargetPtr make_logistic_regression(ClassificationDataset data, double prior_variance = 100.0);

}  // namespace gadmcmc

#endif  // GADMCMC_TARGETS_HPP
