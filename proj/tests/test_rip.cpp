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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "qcs/error.hpp"
#include "qcs/random.hpp"
#include "qcs/rip.hpp"

namespace qcs {
namespace {

QMatrix gaussian(std::uint64_t stream, std::size_t m, std::size_t n) {
  RngStream rng(99, stream);
  return sample_gaussian_matrix(rng, m, n, 1.0 / static_cast<double>(m));
}

// max over |S| = s of the power-iteration norm of Phi_S^* Phi_S - Id.
double enumerate_with_power_iteration(const QMatrix& Phi, std::size_t s) {
  const std::size_t n = Phi.cols();
  double best = 0.0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
  do {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) S.push_back(i);
    best = std::max(best, testing::power_iteration_opnorm(testing::gram_residual(Phi, S)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(8, 2), 28u);
  EXPECT_EQ(binomial(256, 0), 1u);
  EXPECT_EQ(binomial(5, 6), 0u);
  EXPECT_EQ(binomial(52, 5), 2598960u);
  EXPECT_EQ(binomial(1000, 500), UINT64_MAX);
}

TEST(ExactDelta, ScaledIdentity) {
  QMatrix Phi = QMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) Phi(i, i) = 2.0;
  const RipReport r = exact_delta(Phi, 1);
  EXPECT_NEAR(r.delta, 3.0, 1e-14);
  EXPECT_EQ(r.supports_examined, 3u);
  EXPECT_EQ(r.method, RipMethod::kExactEnumeration);
}

TEST(ExactDelta, TiesKeepFirstSupport) {
  const RipReport r = exact_delta(QMatrix::identity(4), 2);
  EXPECT_NEAR(r.delta, 0.0, 1e-15);
  EXPECT_EQ(r.argmax_support, SupportSet({0, 1}));
}

TEST(ExactDelta, Errors) {
  const QMatrix Phi = gaussian(1, 5, 30);
  try {
    (void)exact_delta(Phi, 15, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_THROW((void)exact_delta(Phi, 0), Error);
  EXPECT_THROW((void)exact_delta(Phi, 31), Error);
}

TEST(ExactDelta, AgreesWithPowerIterationAndSampling) {
  for (std::uint64_t t = 0; t < 5; ++t) {
    const QMatrix Phi = gaussian(10 + t, 5, 8);
    const RipReport exact = exact_delta(Phi, 2);
    EXPECT_NEAR(exact.delta, enumerate_with_power_iteration(Phi, 2), 1e-8);
    const double at_argmax = testing::power_iteration_opnorm(testing::gram_residual(
        Phi, {exact.argmax_support.indices().begin(), exact.argmax_support.indices().end()}));
    EXPECT_NEAR(exact.delta, at_argmax, 1e-8);
    RngStream rng(5, t);
    const RipReport sampled = sampled_delta_lower_bound(Phi, 2, 20000, rng);
    EXPECT_EQ(sampled.method, RipMethod::kSampledLowerBound);
    EXPECT_LE(sampled.delta, exact.delta + 1e-12);
    EXPECT_GE(sampled.delta, 0.8 * exact.delta);
  }
}

TEST(ExactDelta, MonotoneInS) {
  const QMatrix Phi = gaussian(20, 6, 9);
  double prev = 0.0;
  for (std::size_t s = 1; s <= 6; ++s) {
    const double d = exact_delta(Phi, s).delta;
    EXPECT_GE(d, prev - 1e-12);
    prev = d;
  }
}

TEST(ExactDelta, IndependentOfWorkerCount) {
  const QMatrix Phi = gaussian(21, 6, 12);
  const RipReport a = exact_delta(Phi, 3, kDefaultEnumerationBudget, 1);
  const RipReport b = exact_delta(Phi, 3, kDefaultEnumerationBudget, 3);
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.argmax_support, b.argmax_support);
  EXPECT_EQ(a.supports_examined, binomial(12, 3));
}

TEST(ExactDelta, RealMatrixMatchesRealComputation) {
  RngStream rng(22, 22);
  const QMatrix Phi = sample_real_gaussian_matrix(rng, 5, 8, 0.2);
  Eigen::MatrixXd R(5, 8);
  for (Eigen::Index r = 0; r < 5; ++r)
    for (Eigen::Index c = 0; c < 8; ++c) R(r, c) = Phi(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).a;
  double real_delta = 0.0;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      Eigen::MatrixXd RS(5, 2);
      RS.col(0) = R.col(a);
      RS.col(1) = R.col(b);
      const Eigen::MatrixXd G = RS.transpose() * RS - Eigen::MatrixXd::Identity(2, 2);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(G);
      real_delta = std::max(real_delta, eig.eigenvalues().cwiseAbs().maxCoeff());
    }
  }
  EXPECT_NEAR(exact_delta(Phi, 2).delta, real_delta, 1e-10);
}

TEST(RipIp, BoundHolds) {
  for (std::uint64_t t = 0; t < 5; ++t) {
    const QMatrix Phi = gaussian(30 + t, 5, 8);
    RngStream rng(6, t);
    const RipIpCheck c = check_rip_ip(Phi, 1, 1, 20000, rng);
    EXPECT_FALSE(c.degenerate);
    EXPECT_EQ(c.pairs, 20000u);
    EXPECT_LE(c.max_ratio, 1.0 + 1e-10);
    EXPECT_GT(c.max_ratio, 0.0);
  }
  RngStream rng(7, 7);
  const RipIpCheck id = check_rip_ip(QMatrix::identity(4), 1, 1, 100, rng);
  EXPECT_TRUE(id.degenerate);
  EXPECT_EQ(id.max_ratio, 0.0);
}

TEST(ErrorConstants, ClosedForms) {
  const ErrorBoundConstants z = error_constants(0.0);
  EXPECT_DOUBLE_EQ(z.C0, 2.0);
  EXPECT_DOUBLE_EQ(z.C1, 4.0);
  const double d = 0.2, r2 = std::sqrt(2.0);
  const ErrorBoundConstants k = error_constants(d);
  EXPECT_NEAR(k.C0, 2.0 * (1.0 + (r2 - 1.0) * d) / (1.0 - (r2 + 1.0) * d), 1e-14);
  EXPECT_NEAR(k.C1, 4.0 * std::sqrt(1.0 + d) / (1.0 - (r2 + 1.0) * d), 1e-14);
  EXPECT_NEAR(k.C0, 4.18767, 1e-5);
  EXPECT_NEAR(k.C1, 8.47282, 1e-5);
  try {
    (void)error_constants(0.42);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionViolated);
  }
  EXPECT_THROW((void)error_constants(-0.1), Error);
  EXPECT_THROW((void)error_constants(r2 - 1.0), Error);
}

TEST(ErrorConstants, GuaranteeText) {
  const std::string text = guarantee_text(error_constants(0.2), 3);
  EXPECT_NE(text.find("delta_6"), std::string::npos);
  EXPECT_NE(text.find("4.18767"), std::string::npos);
  EXPECT_NE(text.find("8.47281"), std::string::npos);
}

}  // namespace
}  // namespace qcs
