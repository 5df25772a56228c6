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

#include "gadmcmc/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include <spdlog/spdlog.h>

#include "gadmcmc/errors.hpp"

namespace gadmcmc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view cell, double &out) {
  cell = trim(cell);
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  return ec == std::errc() && ptr == cell.data() + cell.size() && std::isfinite(out);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

}  // namespace

ClassificationDataset prepare_dataset(const Eigen::MatrixXd &raw, const VectorXd &labels,
                                      bool standardize) {
  if (raw.rows() == 0) throw std::invalid_argument("prepare_dataset: no rows");
  if (labels.size() != raw.rows()) {
    throw std::invalid_argument("prepare_dataset: label count does not match rows");
  }
  const Index m = raw.rows();
  const Index d = raw.cols();
  ClassificationDataset out;
  out.features.resize(m, d + 1);
  for (Index j = 0; j < d; ++j) {
    VectorXd col = raw.col(j);
    if (standardize) {
      const double mean = col.mean();
      col.array() -= mean;
      const double sd = m > 1 ? std::sqrt(col.squaredNorm() / static_cast<double>(m - 1)) : 0.0;
      if (sd > 0.0) col /= sd;
    }
    out.features.col(j) = col;
  }
  out.features.col(d).setOnes();
  out.labels = labels;
  out.standardized = standardize;
  return out;
}

ClassificationDataset parse_csv_dataset(std::istream &in, bool standardize) {
  std::vector<double> values;
  std::vector<double> labels;
  Index width = -1;
  long row = 0;
  bool first_content_row = true;
  std::string line;
  while (std::getline(in, line)) {
    ++row;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto cells = split(body);
    std::vector<double> parsed(cells.size());
    bool numeric = true;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_double(cells[c], parsed[c])) {
        numeric = false;
        break;
      }
    }
    if (first_content_row) {
      first_content_row = false;
      if (!numeric) continue;  // header
    }
    if (!numeric) throw IngestionError("non-numeric cell", row);
    if (cells.size() < 2) throw IngestionError("need at least one feature and a label", row);
    if (width < 0) {
      width = static_cast<Index>(cells.size());
    } else if (static_cast<Index>(cells.size()) != width) {
      throw IngestionError("ragged row: expected " + std::to_string(width) + " columns, got " +
                               std::to_string(cells.size()),
                           row);
    }
    const double label = parsed.back();
    if (label != 0.0 && label != 1.0) throw IngestionError("label must be 0 or 1", row);
    values.insert(values.end(), parsed.begin(), parsed.end() - 1);
    labels.push_back(label);
  }
  if (labels.empty()) throw IngestionError("no data rows", row);

  const Index m = static_cast<Index>(labels.size());
  const Index d = width - 1;
  Eigen::MatrixXd raw =
      Eigen::Map<const Matrix>(values.data(), m, d);
  ClassificationDataset out =
      prepare_dataset(raw, Eigen::Map<const VectorXd>(labels.data(), m), standardize);
  spdlog::info("loaded dataset: {} rows, dimension {} including bias (standardize={})", m,
               out.features.cols(), standardize);
  return out;
}

ClassificationDataset load_csv_dataset(const std::string &path, bool standardize) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open " + path, 0);
  return parse_csv_dataset(in, standardize);
}

ClassificationDataset make_synthetic_logistic_dataset(Index rows, Index features,
                                                      std::uint64_t seed) {
  if (rows < 1 || features < 1) {
    throw std::invalid_argument("make_synthetic_logistic_dataset: rows and features must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  Eigen::MatrixXd raw(rows, features);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < features; ++j) raw(i, j) = normal(rng);
  VectorXd weights(features);
  for (Index j = 0; j < features; ++j) weights(j) = normal(rng);
  const double bias = normal(rng);
  VectorXd labels(rows);
  for (Index i = 0; i < rows; ++i) {
    const double z = raw.row(i).dot(weights) + bias;
    labels(i) = uniform(rng) < 1.0 / (1.0 + std::exp(-z)) ? 1.0 : 0.0;
  }
  return prepare_dataset(raw, labels, true);
}

}  // namespace gadmcmc
