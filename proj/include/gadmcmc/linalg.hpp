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

#ifndef GADMCMC_LINALG_HPP
#define GADMCMC_LINALG_HPP

#include <cmath>
#include <string>

#include <Eigen/Core>
#include <Eigen/Dense>

#include "gadmcmc/errors.hpp"

namespace gadmcmc {

template <typename Scalar>
using RowMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = RowMatrix<double>;
using Eigen::Index;
using Eigen::VectorXd;

namespace detail {
inline void require_size(Index got, Index want, const char *what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": expected length " +
                                std::to_string(want) + ", got " +
                                std::to_string(got));
  }
}
}  // namespace detail

/// Lower-triangular Cholesky-style factor L of a covariance L L^T.
///
/// Storage is dense row-major; the strict upper triangle is always zero and
/// is never read by the routines below. Positivity of the diagonal is not
/// enforced here (adaptation code clamps it), but every operation that needs
/// it checks.
template <typename Scalar>
class BasicTriangularScale {
 public:
  using MatrixType = RowMatrix<Scalar>;
  using VectorType = Vector<Scalar>;

  BasicTriangularScale() = default;

  /// Takes the lower triangle (including diagonal) of a square matrix.
  template <typename Derived>
  explicit BasicTriangularScale(const Eigen::MatrixBase<Derived> &m)
      : entries_(MatrixType::Zero(m.rows(), m.cols())) {
    if (m.rows() != m.cols() || m.rows() == 0) {
      throw std::invalid_argument("TriangularScale: matrix must be square and non-empty");
    }
    entries_.template triangularView<Eigen::Lower>() = m;
  }

  static BasicTriangularScale identity(Index n) {
    return BasicTriangularScale(MatrixType::Identity(n, n));
  }

  template <typename Derived>
  static BasicTriangularScale diagonal(const Eigen::MatrixBase<Derived> &d) {
    return BasicTriangularScale(MatrixType(d.asDiagonal()));
  }

  static BasicTriangularScale scaled_identity(Index n, Scalar value) {
    return BasicTriangularScale(MatrixType(MatrixType::Identity(n, n) * value));
  }

  Index n() const { return entries_.rows(); }
  const MatrixType &matrix() const { return entries_; }
  Scalar operator()(Index i, Index j) const { return entries_(i, j); }
  VectorType diagonal() const { return entries_.diagonal(); }

  auto view() const { return entries_.template triangularView<Eigen::Lower>(); }
  auto transposed_view() const {
    return entries_.transpose().template triangularView<Eigen::Upper>();
  }

  /// L L^T.
  MatrixType covariance() const {
    MatrixType c = view() * entries_.transpose();
    return c;
  }

  /// L += lower(step). The strict upper triangle of `step` is ignored.
  template <typename Derived>
  void add_lower(const Eigen::MatrixBase<Derived> &step) {
    if (step.rows() != n() || step.cols() != n()) {
      throw std::invalid_argument("TriangularScale::add_lower: shape mismatch");
    }
    entries_.template triangularView<Eigen::Lower>() += step;
  }

  void clamp_diagonal(Scalar floor) {
    for (Index i = 0; i < n(); ++i) {
      if (!(entries_(i, i) >= floor)) entries_(i, i) = floor;
    }
  }

  bool min_diagonal_positive() const {
    return n() > 0 && (entries_.diagonal().array() > Scalar(0)).all();
  }

  friend bool operator==(const BasicTriangularScale &a,
                         const BasicTriangularScale &b) {
    return a.entries_.rows() == b.entries_.rows() && a.entries_ == b.entries_;
  }

 private:
  MatrixType entries_;
};

using TriangularScale = BasicTriangularScale<double>;

/// L v.
template <typename Scalar, typename Derived>
Vector<Scalar> tri_matvec(const BasicTriangularScale<Scalar> &L,
                          const Eigen::MatrixBase<Derived> &v) {
  detail::require_size(v.size(), L.n(), "tri_matvec");
  Vector<Scalar> out = L.view() * v;
  return out;
}

/// L^T v.
template <typename Scalar, typename Derived>
Vector<Scalar> tri_transpose_matvec(const BasicTriangularScale<Scalar> &L,
                                    const Eigen::MatrixBase<Derived> &v) {
  detail::require_size(v.size(), L.n(), "tri_transpose_matvec");
  Vector<Scalar> out = L.transposed_view() * v;
  return out;
}

/// [a b^T]_lower: the outer product with its strict upper triangle zeroed.
template <typename DerivedA, typename DerivedB>
RowMatrix<typename DerivedA::Scalar> outer_lower(
    const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
  using Scalar = typename DerivedA::Scalar;
  detail::require_size(b.size(), a.size(), "outer_lower");
  const Index n = a.size();
  RowMatrix<Scalar> out = RowMatrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    out.row(i).head(i + 1) = a(i) * b.head(i + 1).transpose();
  }
  return out;
}

/// Lower triangle (including diagonal) of an arbitrary square matrix.
template <typename Derived>
RowMatrix<typename Derived::Scalar> lower_part(const Eigen::MatrixBase<Derived> &m) {
  RowMatrix<typename Derived::Scalar> out =
      RowMatrix<typename Derived::Scalar>::Zero(m.rows(), m.cols());
  out.template triangularView<Eigen::Lower>() = m;
  return out;
}

/// sum_i log L_ii.
template <typename Scalar>
Scalar log_det_tri(const BasicTriangularScale<Scalar> &L) {
  Scalar acc = 0;
  for (Index i = 0; i < L.n(); ++i) {
    const Scalar d = L(i, i);
    if (!(d > Scalar(0))) {
      throw std::domain_error("log_det_tri: nonpositive diagonal entry at " +
                              std::to_string(i));
    }
    acc += std::log(d);
  }
  return acc;
}

/// Solves L z = b by forward substitution.
template <typename Scalar, typename Derived>
Vector<Scalar> forward_solve(const BasicTriangularScale<Scalar> &L,
                             const Eigen::MatrixBase<Derived> &b) {
  detail::require_size(b.size(), L.n(), "forward_solve");
  for (Index i = 0; i < L.n(); ++i) {
    if (!(L(i, i) > Scalar(0))) {
      throw SingularMatrixError("forward_solve: nonpositive diagonal entry at " +
                                std::to_string(i));
    }
  }
  Vector<Scalar> z = L.view().solve(b);
  return z;
}

}  // namespace gadmcmc

#endif  // GADMCMC_LINALG_HPP
