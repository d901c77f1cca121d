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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcs/qlinalg.hpp"

namespace qcs {

/// minimize ||z||_1 subject to ||Phi z - y||_2 <= eta (eta = 0: Phi z = y).
struct RecoveryProblem {
  QMatrix Phi;
  QVector y;
  double eta = 0.0;
};

struct SolverParams {
  double rho = 1.0;
  int max_iters = 50000;
  double tol_primal = 1e-10;
  double tol_dual = 1e-10;
  bool adaptive_rho = true;
  double rho_factor = 2.0;
  double rho_trigger = 10.0;
  int check_every = 10;     // residual checks and rho updates
  int adapt_until = 5000;   // rho is held fixed after this iteration
  int certify_every = 50;   // eta = 0: optimality test of the polished point; 0 disables
  bool polish = true;
  double polish_threshold = 1e-5;
  std::ostream* trace = nullptr;  // CSV: iteration,primal,dual,objective,rho
};

enum class SolveStatus { kConverged, kMaxIters, kInfeasible };

std::string_view status_name(SolveStatus status);

struct SolveResult {
  QVector x_hat;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double objective = 0.0;  // ||x_hat||_1
  bool polished = false;
  // Stopped early on a verified optimality certificate; the residuals are
  // then ||A x - y|| and the optimality-condition violation at x_hat.
  bool certified = false;
  SolveStatus status = SolveStatus::kMaxIters;
  double rho = 0.0;  // penalty at termination
  std::vector<std::string> warnings;
};

/// Proximal map of kappa * ||.||_2 on R^4: max(0, 1 - kappa/||v||) v.
Eigen::Vector4d block_soft_threshold(const Eigen::Vector4d& v, double kappa);

/// ADMM iterate for   min sum_k ||z_k||  s.t.  x = z,  A x in C,
/// where C = {y} (eta = 0) or the eta-ball around y. Vectors are in the
/// coordinate-major layout of the compact embedding.
struct AdmmState {
  Eigen::VectorXd x;       // last projection onto {A x in C}
  Eigen::VectorXd z;       // group-sparse iterate
  Eigen::VectorXd z_prev;  // z before the last update
  Eigen::VectorXd lambda;  // unscaled multiplier of x = z
  double rho = 1.0;
};

AdmmState zero_state(Eigen::Index dim, double rho);

struct Residuals {
  double primal = 0.0;      // max(||x - z||, dist(A z, C))
  double dual = 0.0;        // rho ||z - z_prev||
  double eps_primal = 0.0;  // sqrt(dim) tol + tol max(||x||, ||z||)
  double eps_dual = 0.0;    // sqrt(dim) tol + tol ||lambda||
  double dual_scale = 0.0;  // ||lambda|| / rho, the scaled multiplier norm

  bool converged() const { return primal <= eps_primal && dual <= eps_dual; }
};

Residuals residuals(const AdmmState& state, const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                    double eta, const SolverParams& params);

/// Euclidean projection onto {v : ||A v - y||_2 <= eta}, with A factored once.
class FeasibleSetProjector {
 public:
  /// Regularizes A A^T by 1e-12 I (recording a warning) when it is not
  /// numerically positive definite; throws FactorizationFailure if that
  /// still fails.
  FeasibleSetProjector(const Eigen::MatrixXd& A, const Eigen::VectorXd& y, double eta);

  Eigen::VectorXd project(const Eigen::VectorXd& w) const;

  /// ||r|| - eta clipped at 0, where r = A v - y.
  double violation(const Eigen::VectorXd& v) const;

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  Eigen::MatrixXd A_;
  Eigen::VectorXd y_;
  double eta_;
  Eigen::LLT<Eigen::MatrixXd> chol_;  // eta == 0
  Eigen::MatrixXd U_;                 // eta > 0: A A^T = U diag(lambda) U^T
  Eigen::VectorXd lambda_;
  std::vector<std::string> warnings_;
};

/// Solves the quaternion basis-pursuit problem through its compact real
/// embedding. Cold-starts at zero; never throws on non-convergence (status
/// reports it).
SolveResult solve(const RecoveryProblem& problem, const SolverParams& params = {});

}  // namespace qcs
