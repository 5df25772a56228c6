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

#ifndef GADMCMC_DATASET_HPP
#define GADMCMC_DATASET_HPP

#include <cstdint>
#include <istream>
#include <string>

#include <Eigen/Core>

#include "gadmcmc/linalg.hpp"

namespace gadmcmc {

/// Binary classification data. `features` is m x d and, after ingestion,
/// its last column is the constant-1 bias.
struct ClassificationDataset {
  Matrix features;
  VectorXd labels;  // entries in {0, 1}
  bool standardized = false;
};

/// Standardises every column of `raw` (when requested) to zero mean and unit
/// sample standard deviation, then appends a bias column of ones. Constant
/// columns are centred but not rescaled.
ClassificationDataset prepare_dataset(const Eigen::MatrixXd &raw, const VectorXd &labels,
                                      bool standardize);

/// CSV: comma separated, optional header (detected by a non-numeric first
/// row), last column is the {0,1} label.
ClassificationDataset parse_csv_dataset(std::istream &in, bool standardize);
ClassificationDataset load_csv_dataset(const std::string &path, bool standardize);

/// Gaussian features, weights drawn from N(0, 1), Bernoulli-logit labels.
ClassificationDataset make_synthetic_logistic_dataset(Index rows, Index features,
                                                      std::uint64_t seed);

}  // namespace gadmcmc

#endif  // GADMCMC_DATASET_HPP
