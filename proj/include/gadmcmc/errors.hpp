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

#ifndef GADMCMC_ERRORS_HPP
#define GADMCMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gadmcmc {

// Dimension mismatches and malformed arguments use std::invalid_argument,
// nonpositive diagonals in log-determinants use std::domain_error.

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string &what)
      : std::runtime_error(what) {}
};

class UnsupportedOperationError : public std::logic_error {
 public:
  explicit UnsupportedOperationError(const std::string &what)
      : std::logic_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

class IngestionError : public std::runtime_error {
 public:
  IngestionError(const std::string &what, long row)
      : std::runtime_error("row " + std::to_string(row) + ": " + what),
        row_(row) {}

  long row() const { return row_; }

 private:
  long row_;
};

}  // namespace gadmcmc

#endif  // GADMCMC_ERRORS_HPP
