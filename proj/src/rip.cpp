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

#include "qcs/rip.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "qcs/error.hpp"
#include "qcs/parallel.hpp"

namespace qcs {

std::string_view method_name(RipMethod method) {
  switch (method) {
    case RipMethod::kExactEnumeration: return "ExactEnumeration";
    case RipMethod::kSampledLowerBound: return "SampledLowerBound";
  }
  return "Unknown";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

using Clock = std::chrono::steady_clock;

// Lexicographic combination of the given rank.
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t s) {
  std::vector<std::size_t> out;
  out.reserve(s);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < s; ++slot) {
    for (std::size_t v = next; v < n; ++v) {
      const std::uint64_t with_v = binomial(n - v - 1, s - slot - 1);
      if (rank < with_v) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= with_v;
    }
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t s = c.size();
  for (std::size_t i = s; i-- > 0;) {
    if (c[i] < n - s + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double gram_residual_norm(const QMatrix& gram, std::span<const std::size_t> S) {
  const std::size_t k = S.size();
  QMatrix sub(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) sub(r, c) = gram(S[r], S[c]);
    sub(r, r) -= 1.0;
  }
  return hermitian_opnorm(sub);
}

struct Best {
  double value = -1.0;
  std::uint64_t rank = 0;
  std::vector<std::size_t> support;
};

SupportSet random_support(RngStream& rng, std::size_t n, std::size_t s) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t k = 0; k < s; ++k) std::swap(pool[k], pool[k + rng.uniform_index(n - k)]);
  pool.resize(s);
  std::sort(pool.begin(), pool.end());
  return SupportSet(std::move(pool));
}

}  // namespace

RipReport exact_delta(const QMatrix& Phi, std::size_t s, std::uint64_t budget,
                      std::size_t workers) {
  const std::size_t n = Phi.cols();
  if (s < 1 || s > n) {
    throw Error(ErrorCode::kSparsityOutOfRange,
                "sparsity " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
  }
  const std::uint64_t total = binomial(n, s);
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration needs " + std::to_string(total) + " supports, budget is " +
                    std::to_string(budget));
  }
  const auto start = Clock::now();
  const QMatrix gram = matmul(adjoint(Phi), Phi);

  if (workers == 0) workers = default_worker_count();
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::max<std::size_t>(1, workers) * 8);
  const std::uint64_t per_chunk = (total + chunks - 1) / chunks;
  std::vector<Best> partial(chunks);

  parallel_for(chunks, workers, [&](std::size_t chunk) {
    const std::uint64_t first = chunk * per_chunk;
    const std::uint64_t last = std::min(total, first + per_chunk);
    if (first >= last) return;
    std::vector<std::size_t> comb = unrank_combination(first, n, s);
    Best& best = partial[chunk];
    for (std::uint64_t rank = first; rank < last; ++rank) {
      const double v = gram_residual_norm(gram, comb);
      if (v > best.value) {
        best.value = v;
        best.rank = rank;
        best.support = comb;
      }
      next_combination(comb, n);
    }
  });

  Best best;
  for (auto& p : partial) {
    if (p.value > best.value) best = std::move(p);
  }

#ifndef NDEBUG
  if (n <= 8 && s > 1) {
    const RipReport smaller = exact_delta(Phi, s - 1, budget, 1);
    assert(smaller.delta <= best.value + 1e-12);
  }
#endif

  RipReport report;
  report.s = s;
  report.delta = best.value;
  report.method = RipMethod::kExactEnumeration;
  report.supports_examined = total;
  report.argmax_support = SupportSet(std::move(best.support));
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

RipReport sampled_delta_lower_bound(const QMatrix& Phi, std::size_t s, std::uint64_t trials,
                                    RngStream& rng) {
  const std::size_t n = Phi.cols();
  if (s < 1 || s > n) {
    throw Error(ErrorCode::kSparsityOutOfRange, "sparsity outside [1, n]");
  }
  if (trials < 1) throw Error(ErrorCode::kInvalidConfig, "trials must be positive");
  const auto start = Clock::now();
  const QMatrix gram = matmul(adjoint(Phi), Phi);

  RipReport report;
  report.s = s;
  report.method = RipMethod::kSampledLowerBound;
  report.supports_examined = trials;
  double best = 0.0;
  std::vector<Quaternion> coef(s);
  for (std::uint64_t t = 0; t < trials; ++t) {
    SupportSet S = random_support(rng, n, s);
    double nx2 = 0.0;
    for (auto& q : coef) {
      q = sample_quaternion_gaussian(rng, 1.0);
      nx2 += norm_squared(q);
    }
    // ||Phi x||^2 = x^* G x restricted to S; the result is real.
    double quad = 0.0;
    const auto idx = S.indices();
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < s; ++c) {
        quad += (conj(coef[r]) * gram(idx[r], idx[c]) * coef[c]).a;
      }
    }
    const double v = std::abs(quad / nx2 - 1.0);
    if (v > best) {
      best = v;
      report.argmax_support = std::move(S);
    }
  }
  report.delta = best;
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

RipIpCheck check_rip_ip(const QMatrix& Phi, std::size_t s1, std::size_t s2, std::uint64_t trials,
                        RngStream& rng) {
  const std::size_t n = Phi.cols();
  if (s1 < 1 || s2 < 1 || s1 + s2 > n) {
    throw Error(ErrorCode::kSparsityOutOfRange, "need s1, s2 >= 1 and s1 + s2 <= n");
  }
  RipIpCheck out;
  out.delta = exact_delta(Phi, s1 + s2).delta;
  out.pairs = trials;
  if (out.delta < 1e-14) {
    out.degenerate = true;
    return out;
  }
  for (std::uint64_t t = 0; t < trials; ++t) {
    // Uniform (s1 + s2)-subset in random order; the first s1 go to x.
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t k = 0; k < s1 + s2; ++k) std::swap(pool[k], pool[k + rng.uniform_index(n - k)]);
    QVector x(n);
    QVector y(n);
    for (std::size_t k = 0; k < s1; ++k) x[pool[k]] = sample_quaternion_gaussian(rng, 1.0);
    for (std::size_t k = s1; k < s1 + s2; ++k) y[pool[k]] = sample_quaternion_gaussian(rng, 1.0);
    const double ip = norm(hermitian_inner(matvec(Phi, x), matvec(Phi, y)));
    const double ratio = ip / (out.delta * l2_norm(x) * l2_norm(y));
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

ErrorBoundConstants error_constants(double delta2s) {
  constexpr double kLimit = std::numbers::sqrt2 - 1.0;
  if (!(delta2s >= 0.0) || !(delta2s < kLimit)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "delta_2s = %.17g violates 0 <= delta_2s < sqrt(2) - 1",
                  delta2s);
    throw Error(ErrorCode::kConditionViolated, buf);
  }
  const double denom = 1.0 - (std::numbers::sqrt2 + 1.0) * delta2s;
  ErrorBoundConstants k;
  k.delta2s = delta2s;
  k.C0 = 2.0 * (1.0 + (std::numbers::sqrt2 - 1.0) * delta2s) / denom;
  k.C1 = 4.0 * std::sqrt(1.0 + delta2s) / denom;
  return k;
}

std::string guarantee_text(const ErrorBoundConstants& k, std::size_t s) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "delta_%zu = %.12g < sqrt(2) - 1.\n"
                "For every x in H^n and y = Phi x + e with ||e||_2 <= eta, the l1 minimizer x# "
                "satisfies\n"
                "  ||x# - x||_2 <= %.12g / sqrt(%zu) * ||x - x_%zu||_1 + %.12g * eta\n"
                "With exact data (eta = 0):\n"
                "  ||x# - x||_1 <= %.12g * ||x - x_%zu||_1\n"
                "and every %zu-sparse x is recovered exactly.\n",
                2 * s, k.delta2s, k.C0, s, s, k.C1, k.C0, s, s);
  return buf;
}

}  // namespace qcs
