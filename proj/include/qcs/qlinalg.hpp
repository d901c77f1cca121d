// Copyright 2026 The QCS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qcs/quaternion.hpp"

namespace qcs {

/// Dense column vector in H^n. Scalars act from the right.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : data_(n) {}
  QVector(std::initializer_list<Quaternion> init) : data_(init) {}
  explicit QVector(std::vector<Quaternion> data) : data_(std::move(data)) {}

  std::size_t size() const noexcept { return data_.size(); }

  Quaternion& operator[](std::size_t i) { return data_[i]; }
  const Quaternion& operator[](std::size_t i) const { return data_[i]; }

  std::span<Quaternion> span() noexcept { return data_; }
  std::span<const Quaternion> span() const noexcept { return data_; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  friend bool operator==(const QVector&, const QVector&) = default;

 private:
  std::vector<Quaternion> data_;
};

/// Dense m x n quaternion matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> row_major);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Quaternion> row_major() const noexcept { return data_; }
  QVector column(std::size_t c) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

/// Strictly increasing index set S within {0, ..., n-1}.
class SupportSet {
 public:
  SupportSet() = default;
  /// Throws IndexOutOfRange if indices are not strictly increasing.
  explicit SupportSet(std::vector<std::size_t> indices);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::span<const std::size_t> indices() const noexcept { return indices_; }
  bool contains(std::size_t i) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

enum class LpNorm { kL0, kL1, kL2, kLinf };

// Vector arithmetic.
QVector operator+(const QVector& x, const QVector& y);
QVector operator-(const QVector& x, const QVector& y);
/// Right scalar multiplication x q.
QVector operator*(const QVector& x, const Quaternion& q);
QVector scale(const QVector& x, double s);

/// <x, y> = y* x = sum conj(y_i) x_i.
Quaternion hermitian_inner(const QVector& x, const QVector& y);

double lp_norm(const QVector& x, LpNorm p);
inline double l1_norm(const QVector& x) { return lp_norm(x, LpNorm::kL1); }
inline double l2_norm(const QVector& x) { return lp_norm(x, LpNorm::kL2); }

/// Indices with nonzero entries.
SupportSet support(const QVector& x);

QVector matvec(const QMatrix& A, const QVector& x);
QMatrix matmul(const QMatrix& A, const QMatrix& B);
QMatrix adjoint(const QMatrix& A);
QMatrix operator-(const QMatrix& A, const QMatrix& B);
QMatrix operator+(const QMatrix& A, const QMatrix& B);

/// Columns of A listed in S, in S order.
QMatrix submatrix(const QMatrix& A, const SupportSet& S);

/// Entries of x at the positions in S (x restricted to S, length |S|).
QVector restrict_to(const QVector& x, const SupportSet& S);

/// Places the entries of z at positions S of a zero vector of length n.
QVector scatter(const QVector& z, const SupportSet& S, std::size_t n);

/// 2m x 2n complex matrix; entry q = z1 + z2 j becomes [[z1, z2], [-conj(z2), conj(z1)]].
Eigen::MatrixXcd complex_adjoint(const QMatrix& A);

/// Largest |Psi(r,c) - conj(Psi(c,r))| over all entries.
double hermitian_deviation(const QMatrix& Psi);

inline constexpr double kHermitianTolerance = 1e-10;

struct HermitianEigen {
  std::vector<double> values;     // ascending
  std::vector<QVector> vectors;   // Psi v = v lambda, <v, v> = 1
};

/// Real right eigenvalues of a Hermitian matrix, ascending. Throws NotHermitian.
std::vector<double> hermitian_eigenvalues(const QMatrix& Psi);

/// Eigenvalues together with orthonormal quaternion eigenvectors.
HermitianEigen hermitian_eigen(const QMatrix& Psi);

/// Operator norm ||Psi||_{2->2} = max |lambda_i|.
double hermitian_opnorm(const QMatrix& Psi);

/// Keeps the s largest-modulus entries; ties keep the lower index.
QVector best_s_sparse(const QVector& x, std::size_t s);

}  // namespace qcs
