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

#include <array>
#include <cmath>
#include <string>
#include <string_view>

namespace qcs {

/// A quaternion a + bi + cj + dk stored as four doubles.
///
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1 and is therefore not
/// commutative: ij = k but ji = -k.
struct Quaternion {
  double a = 0.0;  // real part
  double b = 0.0;  // i
  double c = 0.0;  // j
  double d = 0.0;  // k

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : a(real) {}  // NOLINT: implicit by intent
  constexpr Quaternion(double a_, double b_, double c_, double d_)
      : a(a_), b(b_), c(c_), d(d_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr std::array<double, 4> components() const { return {a, b, c, d}; }

  constexpr Quaternion& operator+=(const Quaternion& q) {
    a += q.a;
    b += q.b;
    c += q.c;
    d += q.d;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& q) {
    a -= q.a;
    b -= q.b;
    c -= q.c;
    d -= q.d;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

/// Hamilton product p * q.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

constexpr double norm_squared(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

/// Multiplicative inverse conj(q) / |q|^2. Throws ZeroDivisor when
/// |q| < 1e-300.
Quaternion inv(const Quaternion& q);

constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
  return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
}

/// Componentwise comparison with absolute tolerance.
inline bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = 1e-12) {
  return std::abs(p.a - q.a) <= tol && std::abs(p.b - q.b) <= tol &&
         std::abs(p.c - q.c) <= tol && std::abs(p.d - q.d) <= tol;
}

/// "a+bi+cj+dk" with an explicit sign on every imaginary component.
std::string to_string(const Quaternion& q);

/// Inverse of to_string; throws ParseError on malformed input.
Quaternion parse_quaternion(std::string_view text);

}  // namespace qcs
