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

#include "qcs/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "qcs/error.hpp"

namespace qcs {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream_id(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x51ED270B27D1A5C3ULL;
  for (std::uint64_t p : parts) h = splitmix64(h ^ splitmix64(p));
  return h;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(splitmix64(seed ^ splitmix64(stream_id))) {}

double RngStream::uniform() {
  // 53 random mantissa bits mapped to (0, 1].
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::size_t RngStream::uniform_index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kIndexOutOfRange, "uniform_index over an empty range");
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return static_cast<std::size_t>(v % bound);
}

Quaternion sample_quaternion_gaussian(RngStream& rng, double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw Error(ErrorCode::kInvalidVariance, "variance must be positive and finite");
  }
  const double sd = std::sqrt(sigma2 / 4.0);
  const double a = rng.normal();
  const double b = rng.normal();
  const double c = rng.normal();
  const double d = rng.normal();
  return {sd * a, sd * b, sd * c, sd * d};
}

QMatrix sample_gaussian_matrix(RngStream& rng, std::size_t m, std::size_t n, double sigma2) {
  if (m == 0 || n == 0) throw Error(ErrorCode::kDimensionMismatch, "matrix shape must be positive");
  std::vector<Quaternion> data(m * n);
  for (auto& q : data) q = sample_quaternion_gaussian(rng, sigma2);
  return QMatrix(m, n, std::move(data));
}

QMatrix sample_real_gaussian_matrix(RngStream& rng, std::size_t m, std::size_t n,
                                    double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw Error(ErrorCode::kInvalidVariance, "variance must be positive and finite");
  }
  if (m == 0 || n == 0) throw Error(ErrorCode::kDimensionMismatch, "matrix shape must be positive");
  const double sd = std::sqrt(sigma2);
  std::vector<Quaternion> data(m * n);
  for (auto& q : data) q = Quaternion(sd * rng.normal());
  return QMatrix(m, n, std::move(data));
}

QVector sample_gaussian_vector(RngStream& rng, std::size_t n, double sigma2, ScalarMode mode) {
  QVector x(n);
  if (mode == ScalarMode::kQuaternion) {
    for (auto& q : x) q = sample_quaternion_gaussian(rng, sigma2);
  } else {
    if (!(sigma2 > 0.0)) throw Error(ErrorCode::kInvalidVariance, "variance must be positive");
    const double sd = std::sqrt(sigma2);
    for (auto& q : x) q = Quaternion(sd * rng.normal());
  }
  return x;
}

SparseSignal sample_sparse_signal(RngStream& rng, std::size_t n, std::size_t s, ScalarMode mode) {
  if (s > n) {
    throw Error(ErrorCode::kSparsityOutOfRange,
                "sparsity " + std::to_string(s) + " exceeds length " + std::to_string(n));
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t k = 0; k < s; ++k) {
    const std::size_t pick = k + rng.uniform_index(n - k);
    std::swap(pool[k], pool[pick]);
  }
  std::vector<std::size_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
  std::sort(chosen.begin(), chosen.end());

  QVector x(n);
  for (std::size_t i : chosen) {
    x[i] = mode == ScalarMode::kQuaternion ? sample_quaternion_gaussian(rng, 1.0)
                                           : Quaternion(rng.normal());
  }
  return {std::move(x), SupportSet(std::move(chosen))};
}

QVector sample_sphere_noise(RngStream& rng, std::size_t m, double radius, ScalarMode mode) {
  QVector e = sample_gaussian_vector(rng, m, 1.0, mode);
  const double ne = l2_norm(e);
  if (ne == 0.0) return e;
  return scale(e, radius / ne);
}

}  // namespace qcs
