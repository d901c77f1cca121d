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
#include <initializer_list>
#include <random>

#include "qcs/qlinalg.hpp"
#include "qcs/quaternion.hpp"

namespace qcs {

/// Whether samplers draw full quaternions or real numbers embedded in H.
enum class ScalarMode { kQuaternion, kReal };

/// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x);

/// Order-sensitive hash of a tuple of words, used to derive stream ids
/// (for example from (tag, m, s, trial_index)).
std::uint64_t derive_stream_id(std::initializer_list<std::uint64_t> parts);

/// Independent, reproducible random stream.
///
/// The engine is a 64-bit Mersenne Twister keyed by
/// splitmix64(seed ^ splitmix64(stream_id)). Identical (seed, stream_id)
/// pairs replay identical sequences on every platform: the engine output is
/// fixed by the C++ standard and normals use an in-house Box-Muller step.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on (0, 1].
  double uniform();
  /// Standard normal.
  double normal();
  /// Uniform on {0, ..., n-1}, unbiased.
  std::size_t uniform_index(std::size_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Quaternion with four independent N(0, sigma2/4) components, so that
/// E|q|^2 = sigma2. Throws InvalidVariance unless sigma2 > 0.
Quaternion sample_quaternion_gaussian(RngStream& rng, double sigma2);

/// m x n matrix with i.i.d. N_H(0, sigma2) entries.
QMatrix sample_gaussian_matrix(RngStream& rng, std::size_t m, std::size_t n, double sigma2);

/// m x n real matrix with i.i.d. N(0, sigma2) entries, stored as quaternions
/// with zero imaginary parts.
QMatrix sample_real_gaussian_matrix(RngStream& rng, std::size_t m, std::size_t n,
                                    double sigma2);

/// Dense vector with i.i.d. entries of total variance sigma2 (quaternion or
/// real depending on mode).
QVector sample_gaussian_vector(RngStream& rng, std::size_t n, double sigma2,
                               ScalarMode mode = ScalarMode::kQuaternion);

struct SparseSignal {
  QVector x;
  SupportSet support;
};

/// s-sparse signal: support uniform over s-subsets of {0..n-1} (partial
/// Fisher-Yates), nonzeros i.i.d. N_H(0,1) (or N(0,1) in real mode).
/// Throws SparsityOutOfRange unless s <= n.
SparseSignal sample_sparse_signal(RngStream& rng, std::size_t n, std::size_t s,
                                  ScalarMode mode = ScalarMode::kQuaternion);

/// Uniform point on the l2 sphere of the given radius in H^m (or in R^m,
/// embedded, for real mode).
QVector sample_sphere_noise(RngStream& rng, std::size_t m, double radius,
                            ScalarMode mode = ScalarMode::kQuaternion);

}  // namespace qcs
