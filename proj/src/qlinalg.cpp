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

#include "qcs/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcs/error.hpp"

namespace qcs {

namespace {

void require_same_length(const QVector& x, const QVector& y, const char* what) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": lengths " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
}

void require_hermitian(const QMatrix& Psi) {
  if (Psi.rows() != Psi.cols()) {
    throw Error(ErrorCode::kNotHermitian, "matrix is not square");
  }
  const double dev = hermitian_deviation(Psi);
  if (!(dev <= kHermitianTolerance)) {
    throw Error(ErrorCode::kNotHermitian,
                "matrix deviates from its adjoint by " + std::to_string(dev));
  }
}

// Eigenpairs of the complex adjoint come in equal pairs; keep one of each.
void check_pairs(const Eigen::VectorXd& ev) {
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Eigen::Index k = 0; k + 1 < ev.size(); k += 2) {
    if (std::abs(ev[k] - ev[k + 1]) > 1e-9 * scale) {
      throw std::logic_error("complex adjoint eigenvalues are not paired");
    }
  }
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix data length does not match shape");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

QVector QMatrix::column(std::size_t c) const {
  if (c >= cols_) throw Error(ErrorCode::kIndexOutOfRange, "column index out of range");
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

SupportSet::SupportSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k] <= indices_[k - 1]) {
      throw Error(ErrorCode::kIndexOutOfRange, "support indices must be strictly increasing");
    }
  }
}

bool SupportSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

QVector operator+(const QVector& x, const QVector& y) {
  require_same_length(x, y, "vector sum");
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

QVector operator-(const QVector& x, const QVector& y) {
  require_same_length(x, y, "vector difference");
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

QVector operator*(const QVector& x, const Quaternion& q) {
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * q;
  return out;
}

QVector scale(const QVector& x, double s) {
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * s;
  return out;
}

Quaternion hermitian_inner(const QVector& x, const QVector& y) {
  require_same_length(x, y, "hermitian_inner");
  Quaternion acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += conj(y[i]) * x[i];
  return acc;
}

double lp_norm(const QVector& x, LpNorm p) {
  switch (p) {
    case LpNorm::kL0:
      return static_cast<double>(
          std::count_if(x.begin(), x.end(), [](const Quaternion& q) { return norm(q) > 0.0; }));
    case LpNorm::kL1: {
      double acc = 0.0;
      for (const auto& q : x) acc += norm(q);
      return acc;
    }
    case LpNorm::kL2: {
      double acc = 0.0;
      for (const auto& q : x) acc += norm_squared(q);
      return std::sqrt(acc);
    }
    case LpNorm::kLinf: {
      double acc = 0.0;
      for (const auto& q : x) acc = std::max(acc, norm(q));
      return acc;
    }
  }
  return 0.0;
}

SupportSet support(const QVector& x) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (norm(x[i]) > 0.0) idx.push_back(i);
  }
  return SupportSet(std::move(idx));
}

QVector matvec(const QMatrix& A, const QVector& x) {
  if (A.cols() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "matvec: matrix has " + std::to_string(A.cols()) +
                                                   " columns, vector has " +
                                                   std::to_string(x.size()) + " entries");
  }
  QVector y(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    Quaternion acc;
    for (std::size_t c = 0; c < A.cols(); ++c) acc += A(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

QMatrix matmul(const QMatrix& A, const QMatrix& B) {
  if (A.cols() != B.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matmul: inner dimensions differ");
  }
  QMatrix C(A.rows(), B.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const Quaternion a = A(r, k);
      for (std::size_t c = 0; c < B.cols(); ++c) C(r, c) += a * B(k, c);
    }
  }
  return C;
}

QMatrix adjoint(const QMatrix& A) {
  QMatrix H(A.cols(), A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) H(c, r) = conj(A(r, c));
  }
  return H;
}

QMatrix operator-(const QMatrix& A, const QMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference: shapes differ");
  }
  QMatrix C(A.rows(), A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) C(r, c) = A(r, c) - B(r, c);
  }
  return C;
}

QMatrix operator+(const QMatrix& A, const QMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum: shapes differ");
  }
  QMatrix C(A.rows(), A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) C(r, c) = A(r, c) + B(r, c);
  }
  return C;
}

QMatrix submatrix(const QMatrix& A, const SupportSet& S) {
  QMatrix out(A.rows(), S.size());
  std::size_t k = 0;
  for (std::size_t c : S.indices()) {
    if (c >= A.cols()) {
      throw Error(ErrorCode::kIndexOutOfRange, "submatrix: column " + std::to_string(c) +
                                                   " out of range for " +
                                                   std::to_string(A.cols()) + " columns");
    }
    for (std::size_t r = 0; r < A.rows(); ++r) out(r, k) = A(r, c);
    ++k;
  }
  return out;
}

QVector restrict_to(const QVector& x, const SupportSet& S) {
  QVector out(S.size());
  std::size_t k = 0;
  for (std::size_t i : S.indices()) {
    if (i >= x.size()) throw Error(ErrorCode::kIndexOutOfRange, "restrict_to: index out of range");
    out[k++] = x[i];
  }
  return out;
}

QVector scatter(const QVector& z, const SupportSet& S, std::size_t n) {
  if (z.size() != S.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "scatter: values and support differ in size");
  }
  QVector out(n);
  std::size_t k = 0;
  for (std::size_t i : S.indices()) {
    if (i >= n) throw Error(ErrorCode::kIndexOutOfRange, "scatter: index out of range");
    out[i] = z[k++];
  }
  return out;
}

Eigen::MatrixXcd complex_adjoint(const QMatrix& A) {
  using C = std::complex<double>;
  const auto m = static_cast<Eigen::Index>(A.rows());
  const auto n = static_cast<Eigen::Index>(A.cols());
  Eigen::MatrixXcd out(2 * m, 2 * n);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Quaternion& q = A(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      const C z1(q.a, q.b);
      const C z2(q.c, q.d);
      out(2 * r, 2 * c) = z1;
      out(2 * r, 2 * c + 1) = z2;
      out(2 * r + 1, 2 * c) = -std::conj(z2);
      out(2 * r + 1, 2 * c + 1) = std::conj(z1);
    }
  }
  return out;
}

double hermitian_deviation(const QMatrix& Psi) {
  if (Psi.rows() != Psi.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "hermitian_deviation: matrix is not square");
  }
  double dev = 0.0;
  for (std::size_t r = 0; r < Psi.rows(); ++r) {
    for (std::size_t c = r; c < Psi.cols(); ++c) {
      dev = std::max(dev, norm(Psi(r, c) - conj(Psi(c, r))));
    }
  }
  return dev;
}

std::vector<double> hermitian_eigenvalues(const QMatrix& Psi) {
  require_hermitian(Psi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(complex_adjoint(Psi),
                                                         Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  check_pairs(ev);
  std::vector<double> out;
  out.reserve(Psi.rows());
  for (Eigen::Index k = 0; k < ev.size(); k += 2) out.push_back(ev[k]);
  return out;
}

HermitianEigen hermitian_eigen(const QMatrix& Psi) {
  require_hermitian(Psi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(complex_adjoint(Psi));
  const Eigen::VectorXd& ev = solver.eigenvalues();
  check_pairs(ev);
  const std::size_t n = Psi.rows();
  const double tol = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());

  // A complex vector v in C^{2n} is the first column of the adjoint of the
  // quaternion vector x with x_i = v_{2i} - conj(v_{2i+1}) j.
  auto to_quaternion = [&](Eigen::Index col) {
    const Eigen::VectorXcd v = solver.eigenvectors().col(col);
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> z1 = v[static_cast<Eigen::Index>(2 * i)];
      const std::complex<double> z2 = -std::conj(v[static_cast<Eigen::Index>(2 * i + 1)]);
      x[i] = Quaternion(z1.real(), z1.imag(), z2.real(), z2.imag());
    }
    return x;
  };

  HermitianEigen out;
  Eigen::Index k = 0;
  while (k < ev.size()) {
    // Cluster of numerically equal eigenvalues; 2p complex columns span p
    // quaternion directions, orthonormalized with the Hermitian form.
    Eigen::Index end = k;
    while (end < ev.size() && std::abs(ev[end] - ev[k]) <= tol) ++end;
    const auto wanted = static_cast<std::size_t>((end - k) / 2);
    std::vector<QVector> cluster;
    for (Eigen::Index col = k; col < end && cluster.size() < wanted; ++col) {
      QVector x = to_quaternion(col);
      for (const auto& b : cluster) x = x - b * hermitian_inner(x, b);
      const double nx = l2_norm(x);
      if (nx > 1e-3) cluster.push_back(scale(x, 1.0 / nx));
    }
    for (std::size_t p = 0; p < cluster.size(); ++p) {
      out.values.push_back(ev[k + static_cast<Eigen::Index>(2 * p)]);
      out.vectors.push_back(std::move(cluster[p]));
    }
    k = end;
  }
  return out;
}

double hermitian_opnorm(const QMatrix& Psi) {
  const auto ev = hermitian_eigenvalues(Psi);
  double best = 0.0;
  for (double v : ev) best = std::max(best, std::abs(v));
  return best;
}

QVector best_s_sparse(const QVector& x, std::size_t s) {
  if (s > x.size()) {
    throw Error(ErrorCode::kSparsityOutOfRange, "best_s_sparse: s exceeds vector length");
  }
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return norm(x[l]) > norm(x[r]); });
  QVector out(x.size());
  for (std::size_t k = 0; k < s; ++k) out[order[k]] = x[order[k]];
  return out;
}

}  // namespace qcs
