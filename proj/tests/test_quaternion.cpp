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

#include "oracles.hpp"
#include "qcs/error.hpp"
#include "qcs/quaternion.hpp"

namespace qcs {
namespace {

using testing::cayley_dickson_mul;
using testing::qdist;

constexpr Quaternion I = Quaternion::i();
constexpr Quaternion J = Quaternion::j();
constexpr Quaternion K = Quaternion::k();

TEST(Quaternion, MultiplicationTable) {
  EXPECT_EQ(I * J, K);
  EXPECT_EQ(J * I, -K);
  EXPECT_EQ(J * K, I);
  EXPECT_EQ(K * J, -I);
  EXPECT_EQ(K * I, J);
  EXPECT_EQ(I * K, -J);
  EXPECT_EQ(I * I, Quaternion(-1.0));
  EXPECT_EQ(J * J, Quaternion(-1.0));
  EXPECT_EQ(K * K, Quaternion(-1.0));
  EXPECT_EQ(I * J * K, Quaternion(-1.0));
}

TEST(Quaternion, WorkedProducts) {
  const Quaternion q{2, 3, 0, 0};
  EXPECT_EQ(q * Quaternion(1.0), q);
  EXPECT_EQ(Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0), Quaternion(1, 1, 1, 1));
}

TEST(Quaternion, OnlyDistinctImaginaryUnitsAnticommute) {
  const Quaternion units[4] = {Quaternion(1.0), I, J, K};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const bool anti = a != b && a > 0 && b > 0;
      if (anti) {
        EXPECT_EQ(units[a] * units[b], -(units[b] * units[a]));
      } else {
        EXPECT_EQ(units[a] * units[b], units[b] * units[a]);
      }
    }
  }
}

TEST(Quaternion, Conjugation) {
  EXPECT_EQ(conj(Quaternion(1, 1, 1, 1)), Quaternion(1, -1, -1, -1));
  const Quaternion q{2, 0, -1, 0};
  EXPECT_EQ(conj(conj(q)), q);
  EXPECT_EQ(conj(I * J), -K);
  EXPECT_EQ(conj(J) * conj(I), -K);
}

TEST(Quaternion, Norm) {
  EXPECT_DOUBLE_EQ(norm(Quaternion(1, 1, 1, 1)), 2.0);
  EXPECT_DOUBLE_EQ(norm(Quaternion()), 0.0);
  const Quaternion p{1, 1, 0, 0}, q{1, 0, 1, 0};
  EXPECT_NEAR(norm(p * q), 2.0, 1e-15);
  EXPECT_NEAR(norm(p) * norm(q), 2.0, 1e-15);
}

TEST(Quaternion, Inverse) {
  EXPECT_TRUE(approx_equal(inv(I), -I));
  EXPECT_TRUE(approx_equal(inv(Quaternion(2.0)), Quaternion(0.5)));
  EXPECT_TRUE(approx_equal(inv(Quaternion(1, 1, 0, 0)), Quaternion(0.5, -0.5, 0, 0)));
  try {
    (void)inv(Quaternion());
    FAIL() << "expected ZeroDivisor";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDivisor);
  }
  EXPECT_THROW((void)inv(Quaternion(1e-301)), Error);
}

TEST(Quaternion, MatchesCayleyDicksonProduct) {
  testing::TestRng rng(11);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion p = rng.quaternion(), q = rng.quaternion();
    EXPECT_LE(qdist(p * q, cayley_dickson_mul(p, q)), 1e-13 * (1.0 + norm(p) * norm(q)));
  }
}

TEST(Quaternion, RandomAxioms) {
  testing::TestRng rng(12);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion p = rng.quaternion(), q = rng.quaternion(), r = rng.quaternion();
    const double scale = 1.0 + norm(p) * norm(q) * norm(r);
    EXPECT_LE(qdist((p * q) * r, p * (q * r)), 1e-12 * scale);
    EXPECT_LE(qdist(p * (q + r), p * q + p * r), 1e-12 * scale);
    EXPECT_LE(qdist(conj(p * q), conj(q) * conj(p)), 1e-12 * scale);
    EXPECT_NEAR(norm(p * q), norm(p) * norm(q), 1e-12 * (1.0 + norm(p) * norm(q)));
    EXPECT_LE(qdist(p * inv(p), Quaternion(1.0)), 1e-12);
    EXPECT_LE(qdist(inv(p) * p, Quaternion(1.0)), 1e-12);
  }
}

TEST(Quaternion, StringRoundTrip) {
  const Quaternion q{1.0 / 3.0, -2.5, 1e-300, -0.0};
  const Quaternion back = parse_quaternion(to_string(q));
  EXPECT_EQ(back, q);
}

}  // namespace
}  // namespace qcs
