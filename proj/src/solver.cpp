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

#include "qcs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "qcs/embedding.hpp"
#include "qcs/error.hpp"

namespace qcs {

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged: return "Converged";
    case SolveStatus::kMaxIters: return "MaxIters";
    case SolveStatus::kInfeasible: return "Infeasible";
  }
  return "Unknown";
}

Eigen::Vector4d block_soft_threshold(const Eigen::Vector4d& v, double kappa) {
  const double nv = v.norm();
  if (nv <= kappa || nv == 0.0) return Eigen::Vector4d::Zero();
  return (1.0 - kappa / nv) * v;
}

AdmmState zero_state(Eigen::Index dim, double rho) {
  AdmmState s;
  s.x = Eigen::VectorXd::Zero(dim);
  s.z = Eigen::VectorXd::Zero(dim);
  s.z_prev = Eigen::VectorXd::Zero(dim);
  s.lambda = Eigen::VectorXd::Zero(dim);
  s.rho = rho;
  return s;
}

namespace {

double ball_distance(const Eigen::VectorXd& r, double eta) {
  return std::max(0.0, r.norm() - eta);
}

double group_l1(const Eigen::VectorXd& v) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < v.size(); k += 4) acc += v.segment<4>(k).norm();
  return acc;
}

}  // namespace

Residuals residuals(const AdmmState& state, const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                    double eta, const SolverParams& params) {
  Residuals res;
  const double sqrt_dim = std::sqrt(static_cast<double>(state.z.size()));
  const double consensus = (state.x - state.z).norm();
  const Eigen::VectorXd r = A * state.z - y;
  res.primal = std::max(consensus, ball_distance(r, eta));
  res.dual = state.rho * (state.z - state.z_prev).norm();
  res.eps_primal = sqrt_dim * params.tol_primal +
                   params.tol_primal * std::max(state.x.norm(), state.z.norm());
  const double lambda_norm = state.lambda.norm();
  res.eps_dual = sqrt_dim * params.tol_dual + params.tol_dual * lambda_norm;
  res.dual_scale = lambda_norm / state.rho;
  return res;
}

FeasibleSetProjector::FeasibleSetProjector(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                                           double eta)
    : A_(A), y_(y), eta_(eta) {
  Eigen::MatrixXd gram = A * A.transpose();
  if (eta_ == 0.0) {
    chol_.compute(gram);
    bool ok = chol_.info() == Eigen::Success;
    if (ok) {
      const Eigen::VectorXd piv = chol_.matrixLLT().diagonal();
      const double max_diag = gram.diagonal().maxCoeff();
      ok = piv.minCoeff() * piv.minCoeff() > 1e-14 * std::max(max_diag, 1e-300);
    }
    if (!ok) {
      warnings_.emplace_back("A A^T is rank deficient; regularized with 1e-12 I");
      gram.diagonal().array() += 1e-12;
      chol_.compute(gram);
      if (chol_.info() != Eigen::Success) {
        throw Error(ErrorCode::kFactorizationFailure, "Cholesky factorization of A A^T failed");
      }
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    if (eig.info() != Eigen::Success) {
      throw Error(ErrorCode::kFactorizationFailure, "eigendecomposition of A A^T failed");
    }
    U_ = eig.eigenvectors();
    lambda_ = eig.eigenvalues().cwiseMax(0.0);
    const double tiny = 1e-14 * std::max(lambda_.maxCoeff(), 1e-300);
    if (lambda_.minCoeff() <= tiny) {
      warnings_.emplace_back("A A^T is rank deficient; regularized with 1e-12 I");
      lambda_.array() += 1e-12;
    }
  }
}

Eigen::VectorXd FeasibleSetProjector::project(const Eigen::VectorXd& w) const {
  Eigen::VectorXd r = A_ * w - y_;
  if (eta_ == 0.0) {
    const Eigen::VectorXd z = chol_.solve(r);
    return w - A_.transpose() * z;
  }
  if (r.norm() <= eta_) return w;

  // Find mu > 0 with sum_i rhat_i^2 / (1 + mu lambda_i)^2 = eta^2 by Newton on
  // 1/||r(mu)|| - 1/eta, which is concave and increasing in mu.
  const Eigen::VectorXd rhat = U_.transpose() * r;
  const Eigen::ArrayXd r2 = rhat.array().square();
  const Eigen::ArrayXd lam = lambda_.array();
  double mu = 0.0;
  for (int it = 0; it < 200; ++it) {
    const Eigen::ArrayXd denom = 1.0 + mu * lam;
    const double g = (r2 / denom.square()).sum();
    const double gp = -2.0 * (r2 * lam / denom.cube()).sum();
    const double norm_r = std::sqrt(g);
    const double h = 1.0 / norm_r - 1.0 / eta_;
    if (std::abs(norm_r - eta_) <= 1e-14 * eta_ || gp == 0.0) break;
    const double hp = -0.5 * gp / (g * norm_r);
    const double next = mu - h / hp;
    if (!(next > mu)) break;
    mu = next;
  }
  const Eigen::VectorXd weights =
      (mu / (1.0 + mu * lam)).matrix().cwiseProduct(rhat);
  return w - A_.transpose() * (U_ * weights);
}

double FeasibleSetProjector::violation(const Eigen::VectorXd& v) const {
  return ball_distance(A_ * v - y_, eta_);
}

namespace {

std::vector<Eigen::Index> active_groups(const Eigen::VectorXd& z, double threshold) {
  const Eigen::Index groups = z.size() / 4;
  double max_norm = 0.0;
  for (Eigen::Index k = 0; k < groups; ++k) max_norm = std::max(max_norm, z.segment<4>(4 * k).norm());
  std::vector<Eigen::Index> active;
  for (Eigen::Index k = 0; k < groups; ++k) {
    if (max_norm > 0.0 && z.segment<4>(4 * k).norm() > threshold * max_norm) active.push_back(k);
  }
  return active;
}

Eigen::MatrixXd gather_groups(const Eigen::MatrixXd& A, const std::vector<Eigen::Index>& groups) {
  Eigen::MatrixXd out(A.rows(), static_cast<Eigen::Index>(4 * groups.size()));
  for (std::size_t p = 0; p < groups.size(); ++p) {
    out.middleCols<4>(static_cast<Eigen::Index>(4 * p)) = A.middleCols<4>(4 * groups[p]);
  }
  return out;
}

// Least squares on the groups of z above threshold * max group norm. Returns
// nothing when the restricted system is wider than tall or rank deficient.
std::optional<Eigen::VectorXd> polish_on_support(const Eigen::MatrixXd& A,
                                                 const Eigen::VectorXd& y,
                                                 const Eigen::VectorXd& z, double threshold) {
  const std::vector<Eigen::Index> active = active_groups(z, threshold);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(z.size());
  if (active.empty()) return out;
  const auto cols = static_cast<Eigen::Index>(4 * active.size());
  if (cols > A.rows()) return std::nullopt;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(gather_groups(A, active));
  if (qr.rank() < cols) return std::nullopt;
  const Eigen::VectorXd sol = qr.solve(y);
  for (std::size_t p = 0; p < active.size(); ++p) {
    out.segment<4>(4 * active[p]) = sol.segment<4>(static_cast<Eigen::Index>(4 * p));
  }
  return out;
}

struct Certificate {
  Eigen::VectorXd x;
  double primal = 0.0;  // ||A x - y||
  double dual = 0.0;    // optimality-condition violation
};

// Exact-data optimality check for the polished point x on support S: x is a
// minimizer iff some nu has (A^T nu)_k = x_k / ||x_k|| on S and
// ||(A^T nu)_k|| <= 1 off S. nu is taken as the minimum-norm solution of the
// equations on S.
std::optional<Certificate> certify(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                                   const Eigen::VectorXd& z, double threshold, double tol) {
  auto x = polish_on_support(A, y, z, threshold);
  if (!x) return std::nullopt;
  Certificate cert;
  cert.primal = (A * *x - y).norm();
  if (cert.primal > 1e-12 * std::max(1.0, y.norm())) return std::nullopt;

  std::vector<Eigen::Index> support;
  std::vector<bool> on_support(static_cast<std::size_t>(x->size() / 4), false);
  for (Eigen::Index k = 0; k < x->size() / 4; ++k) {
    if (x->segment<4>(4 * k).norm() > 0.0) {
      support.push_back(k);
      on_support[static_cast<std::size_t>(k)] = true;
    }
  }
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(A.rows());
  double eq_residual = 0.0;
  if (!support.empty()) {
    const Eigen::MatrixXd AS = gather_groups(A, support);
    Eigen::VectorXd g(AS.cols());
    for (std::size_t p = 0; p < support.size(); ++p) {
      const Eigen::Vector4d xk = x->segment<4>(4 * support[p]);
      g.segment<4>(static_cast<Eigen::Index>(4 * p)) = xk / xk.norm();
    }
    const Eigen::MatrixXd ASt = AS.transpose();
    nu = ASt.completeOrthogonalDecomposition().solve(g);
    eq_residual = (ASt * nu - g).norm();
  }
  const Eigen::VectorXd c = A.transpose() * nu;
  double off_excess = 0.0;
  for (Eigen::Index k = 0; k < c.size() / 4; ++k) {
    if (!on_support[static_cast<std::size_t>(k)]) {
      off_excess = std::max(off_excess, c.segment<4>(4 * k).norm() - 1.0);
    }
  }
  cert.dual = std::max(eq_residual, off_excess);
  if (cert.dual > tol) return std::nullopt;
  cert.x = std::move(*x);
  return cert;
}

}  // namespace

SolveResult solve(const RecoveryProblem& problem, const SolverParams& params) {
  if (problem.y.size() != problem.Phi.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "measurement length does not match matrix rows");
  }
  if (!(problem.eta >= 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "noise bound eta must be non-negative");
  }
  if (!(params.rho > 0.0) || !(params.tol_primal > 0.0) || !(params.tol_dual > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "rho and tolerances must be positive");
  }

  const Eigen::MatrixXd A = compact_operator(problem.Phi);
  const Eigen::VectorXd y = vec4(problem.y);
  const double eta = problem.eta;
  const FeasibleSetProjector projector(A, y, eta);

  SolveResult result;
  result.warnings = projector.warnings();

  AdmmState st = zero_state(A.cols(), params.rho);
  const Eigen::Index groups = A.cols() / 4;
  Eigen::VectorXd v(A.cols());
  Residuals res;
  bool converged = false;
  int it = 0;
  const int check_every = std::max(1, params.check_every);
  const bool try_certify = params.polish && eta == 0.0 && params.certify_every > 0;
  std::optional<Certificate> certified;

  if (params.trace != nullptr) *params.trace << "iteration,primal,dual,objective,rho\n";

  while (it < params.max_iters) {
    ++it;
    st.x = projector.project(st.z - st.lambda / st.rho);
    st.z_prev = st.z;
    v = st.x + st.lambda / st.rho;
    const double kappa = 1.0 / st.rho;
    for (Eigen::Index k = 0; k < groups; ++k) {
      st.z.segment<4>(4 * k) = block_soft_threshold(v.segment<4>(4 * k), kappa);
    }
    st.lambda += st.rho * (st.x - st.z);

    if (it % check_every != 0 && it != params.max_iters) continue;
    res = residuals(st, A, y, eta, params);
    if (params.trace != nullptr) {
      *params.trace << it << ',' << res.primal << ',' << res.dual << ',' << group_l1(st.z) << ','
                    << st.rho << '\n';
    }
    if (res.converged()) {
      converged = true;
      break;
    }
    if (try_certify && it % params.certify_every == 0) {
      if (auto cert = certify(A, y, st.z, params.polish_threshold, params.tol_dual)) {
        certified = std::move(cert);
        break;
      }
    }
    if (params.adaptive_rho && it <= params.adapt_until) {
      const double consensus = (st.x - st.z).norm();
      if (consensus > params.rho_trigger * res.dual) {
        st.rho *= params.rho_factor;
      } else if (res.dual > params.rho_trigger * consensus) {
        st.rho /= params.rho_factor;
      }
    }
  }

  result.iterations = it;
  if (certified) {
    result.x_hat = unvec4(certified->x);
    result.objective = l1_norm(result.x_hat);
    result.primal_residual = certified->primal;
    result.dual_residual = certified->dual;
    result.rho = st.rho;
    result.polished = true;
    result.certified = true;
    result.status = SolveStatus::kConverged;
    return result;
  }
  result.primal_residual = res.primal;
  result.dual_residual = res.dual;
  result.rho = st.rho;
  result.status = converged ? SolveStatus::kConverged : SolveStatus::kMaxIters;

  const double y_scale = std::max(1.0, y.norm());
  if (projector.violation(st.x) > 1e-6 * y_scale) result.status = SolveStatus::kInfeasible;

  Eigen::VectorXd x_hat = st.z;
  if (params.polish && result.status != SolveStatus::kInfeasible) {
    if (auto cand = polish_on_support(A, y, st.z, params.polish_threshold)) {
      const bool feasible = (A * *cand - y).norm() <= eta + 1e-12 * y_scale;
      const double reference = group_l1(st.x);
      const bool no_worse = group_l1(*cand) <= reference + 1e-9 * std::max(1.0, reference);
      if (feasible && no_worse) {
        x_hat = *cand;
        result.polished = true;
      }
    }
  }

  result.x_hat = unvec4(x_hat);
  result.objective = l1_norm(result.x_hat);
  return result;
}

}  // namespace qcs
