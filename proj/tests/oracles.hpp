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

// Reference computations used only by tests. None of them calls into the
// library routine it is used to check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qcs/qlinalg.hpp"
#include "qcs/quaternion.hpp"

namespace qcs::testing {

// Test-local random source, separate from the library's streams.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}
  double normal() { return dist_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }
  QVector vector(std::size_t n) {
    QVector x(n);
    for (auto& q : x) q = quaternion();
    return x;
  }
  QMatrix matrix(std::size_t r, std::size_t c) {
    QMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = quaternion();
    return A;
  }
  QMatrix hermitian(std::size_t n) {
    QMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      A(i, i) = Quaternion(normal());
      for (std::size_t j = i + 1; j < n; ++j) {
        A(i, j) = quaternion();
        A(j, i) = conj(A(i, j));
      }
    }
    return A;
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> dist_;
};

// Product through the Cayley-Dickson pair q = z1 + z2 j, z1, z2 complex:
// (z1, z2)(w1, w2) = (z1 w1 - z2 conj(w2), z1 w2 + z2 conj(w1)).
inline Quaternion cayley_dickson_mul(const Quaternion& p, const Quaternion& q) {
  using C = std::complex<double>;
  const C z1(p.a, p.b), z2(p.c, p.d), w1(q.a, q.b), w2(q.c, q.d);
  const C r1 = z1 * w1 - z2 * std::conj(w2);
  const C r2 = z1 * w2 + z2 * std::conj(w1);
  return {r1.real(), r1.imag(), r2.real(), r2.imag()};
}

inline double qdist(const Quaternion& p, const Quaternion& q) { return norm(p - q); }

inline double vdist(const QVector& x, const QVector& y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += norm_squared(x[i] - y[i]);
  return std::sqrt(acc);
}

inline QVector ref_matvec(const QMatrix& A, const QVector& x) {
  QVector out(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    Quaternion acc;
    for (std::size_t c = 0; c < A.cols(); ++c) acc += cayley_dickson_mul(A(r, c), x[c]);
    out[r] = acc;
  }
  return out;
}

inline Quaternion ref_inner(const QVector& x, const QVector& y) {
  Quaternion acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += cayley_dickson_mul(conj(y[i]), x[i]);
  return acc;
}

inline double ref_l2(const QVector& x) {
  double acc = 0.0;
  for (const auto& q : x) acc += norm_squared(q);
  return std::sqrt(acc);
}

inline double ref_l1(const QVector& x) {
  double acc = 0.0;
  for (const auto& q : x) acc += norm(q);
  return acc;
}

// Largest |eigenvalue| of a Hermitian quaternion matrix by power iteration on
// Psi^2, working directly with quaternion vectors.
inline double power_iteration_opnorm(const QMatrix& Psi, std::uint64_t seed = 7,
                                     int max_iters = 200000) {
  TestRng rng(seed);
  QVector v = rng.vector(Psi.cols());
  double prev = -1.0;
  double est = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    const double nv = ref_l2(v);
    if (nv == 0.0) return 0.0;
    for (auto& q : v) q = q * (1.0 / nv);
    const QVector w = ref_matvec(Psi, ref_matvec(Psi, v));
    est = std::sqrt(std::max(0.0, ref_inner(w, v).a));  // Rayleigh quotient of Psi^2
    if (std::abs(est - prev) <= 1e-15 * std::max(1.0, est) && it > 20) break;
    prev = est;
    v = w;
  }
  return est;
}

// Psi_S = Phi_S^* Phi_S - Id, assembled entry by entry.
inline QMatrix gram_residual(const QMatrix& Phi, const std::vector<std::size_t>& S) {
  QMatrix G(S.size(), S.size());
  for (std::size_t a = 0; a < S.size(); ++a) {
    for (std::size_t b = 0; b < S.size(); ++b) {
      Quaternion acc;
      for (std::size_t r = 0; r < Phi.rows(); ++r) {
        acc += cayley_dickson_mul(conj(Phi(r, S[a])), Phi(r, S[b]));
      }
      if (a == b) acc -= Quaternion(1.0);
      G(a, b) = acc;
    }
  }
  return G;
}

// Group-l1 minimization min sum_k ||x_k|| s.t. Phi x = y by Newton's method
// on the smoothed objective sum_k sqrt(||x_k||^2 + eps^2) over the affine
// solution set, with eps driven to 1e-11. Meant for a few dozen unknowns.
inline QVector smoothed_bp_oracle(const QMatrix& Phi, const QVector& y) {
  const auto m = static_cast<Eigen::Index>(Phi.rows());
  const auto n = static_cast<Eigen::Index>(Phi.cols());
  // Real 4m x 4n operator built from the Cayley-Dickson product on basis
  // quaternions.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(4 * m, 4 * n);
  const Quaternion basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (int e = 0; e < 4; ++e) {
        const Quaternion p = cayley_dickson_mul(Phi(static_cast<std::size_t>(r), static_cast<std::size_t>(c)), basis[e]);
        A(4 * r + 0, 4 * c + e) = p.a;
        A(4 * r + 1, 4 * c + e) = p.b;
        A(4 * r + 2, 4 * c + e) = p.c;
        A(4 * r + 3, 4 * c + e) = p.d;
      }
    }
  }
  Eigen::VectorXd b(4 * m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const auto& q = y[static_cast<std::size_t>(r)];
    b.segment<4>(4 * r) << q.a, q.b, q.c, q.d;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd x0 = svd.solve(b);
  const Eigen::Index rank = svd.rank();
  const Eigen::MatrixXd N = svd.matrixV().rightCols(4 * n - rank);

  auto objective = [&](const Eigen::VectorXd& x, double eps) {
    double f = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) f += std::sqrt(x.segment<4>(4 * k).squaredNorm() + eps * eps);
    return f;
  };

  Eigen::VectorXd w = Eigen::VectorXd::Zero(N.cols());
  for (double eps = 1e-1; eps >= 1e-11; eps *= 0.1) {
    for (int it = 0; it < 200; ++it) {
      const Eigen::VectorXd x = x0 + N * w;
      Eigen::VectorXd g = Eigen::VectorXd::Zero(4 * n);
      Eigen::MatrixXd H = Eigen::MatrixXd::Zero(4 * n, 4 * n);
      for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Vector4d xk = x.segment<4>(4 * k);
        const double s = std::sqrt(xk.squaredNorm() + eps * eps);
        g.segment<4>(4 * k) = xk / s;
        H.block<4, 4>(4 * k, 4 * k) =
            Eigen::Matrix4d::Identity() / s - xk * xk.transpose() / (s * s * s);
      }
      const Eigen::VectorXd gr = N.transpose() * g;
      if (gr.norm() < 1e-14) break;
      const Eigen::MatrixXd Hr = N.transpose() * H * N;
      const Eigen::VectorXd step = Hr.ldlt().solve(-gr);
      double t = 1.0;
      const double f0 = objective(x, eps);
      const double slope = gr.dot(step);
      while (t > 1e-12 && objective(x0 + N * (w + t * step), eps) > f0 + 1e-4 * t * slope) t *= 0.5;
      w += t * step;
      if ((t * step).norm() < 1e-15 * (1.0 + w.norm())) break;
    }
  }
  const Eigen::VectorXd x = x0 + N * w;
  QVector out(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = {x(4 * k), x(4 * k + 1), x(4 * k + 2), x(4 * k + 3)};
  }
  return out;
}

}  // namespace qcs::testing
