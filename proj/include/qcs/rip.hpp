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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "qcs/qlinalg.hpp"
#include "qcs/random.hpp"

namespace qcs {

enum class RipMethod { kExactEnumeration, kSampledLowerBound };

std::string_view method_name(RipMethod method);

struct RipReport {
  std::size_t s = 0;
  double delta = 0.0;
  RipMethod method = RipMethod::kExactEnumeration;
  std::uint64_t supports_examined = 0;
  SupportSet argmax_support;
  double elapsed_seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// delta_s = max over |S| = s of ||Phi_S^* Phi_S - Id||_{2->2}.
///
/// Supports smaller than s are not visited: every principal submatrix of a
/// Hermitian matrix has operator norm at most that of the full matrix, so
/// they cannot raise the maximum. Ties keep the lexicographically first
/// support. Throws BudgetExceeded when C(n, s) > budget, SparsityOutOfRange
/// unless 1 <= s <= n.
RipReport exact_delta(const QMatrix& Phi, std::size_t s,
                      std::uint64_t budget = kDefaultEnumerationBudget, std::size_t workers = 0);

/// max over `trials` random s-sparse unit x of | ||Phi x||^2 - 1 |. Supports
/// are uniform over s-subsets; nonzeros are N_H(0,1) before normalization.
RipReport sampled_delta_lower_bound(const QMatrix& Phi, std::size_t s, std::uint64_t trials,
                                    RngStream& rng);

struct RipIpCheck {
  double max_ratio = 0.0;  // max |<Phi x, Phi y>| / (delta ||x|| ||y||)
  double delta = 0.0;      // exact delta_{s1+s2}
  bool degenerate = false; // delta below 1e-14; ratio reported as 0
  std::uint64_t pairs = 0;
};

/// Samples disjoint-support pairs (x s1-sparse, y s2-sparse) and compares
/// |<Phi x, Phi y>| against delta_{s1+s2} ||x|| ||y||.
RipIpCheck check_rip_ip(const QMatrix& Phi, std::size_t s1, std::size_t s2, std::uint64_t trials,
                        RngStream& rng);

struct ErrorBoundConstants {
  double delta2s = 0.0;
  double C0 = 0.0;
  double C1 = 0.0;
};

/// Constants of the l1 recovery error bound
///   ||x# - x||_2 <= C0/sqrt(s) ||x - x_s||_1 + C1 eta,
///   C0 = 2 (1 + (sqrt2 - 1) d) / (1 - (sqrt2 + 1) d),
///   C1 = 4 sqrt(1 + d) / (1 - (sqrt2 + 1) d).
/// Throws ConditionViolated unless 0 <= delta2s < sqrt(2) - 1.
ErrorBoundConstants error_constants(double delta2s);

/// Human-readable recovery guarantee for sparsity s.
std::string guarantee_text(const ErrorBoundConstants& k, std::size_t s);

}  // namespace qcs
