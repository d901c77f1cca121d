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
#include <cstddef>
#include <json.hpp>

#include "qcs/qlinalg.hpp"

namespace qcs {

/// Real forms of the quaternion l1 problem.
///
/// Two layouts are used and both are fixed:
///  * coordinate-major ("vec4"): the four components of coordinate k sit at
///    4k..4k+3. A_compact maps vec4(z) to vec4(Phi z).
///  * component-major: all real parts, then all i parts, then j, then k.
///    y_tilde and the rows of A_socp use this layout.
///
/// A_socp has 5 columns per coordinate: (t_k, z_r, z_i, z_j, z_k), with the
/// t_k column identically zero. Dropping those columns and permuting rows to
/// coordinate-major gives A_compact.
struct RealEmbedding {
  std::size_t m = 0;
  std::size_t n = 0;
  Eigen::MatrixXd A_compact;  // 4m x 4n
  Eigen::MatrixXd A_socp;     // 4m x 5n
  Eigen::VectorXd y_tilde;    // 4m, component-major
  Eigen::VectorXd c;          // 5n, ones at the t_k slots
};

/// 4x4 real matrix of left multiplication z -> phi z acting on (a, b, c, d).
Eigen::Matrix4d left_multiplication_block(const Quaternion& phi);

/// Coordinate-major 4m x 4n operator with A * vec4(z) == vec4(Phi z).
Eigen::MatrixXd compact_operator(const QMatrix& Phi);

/// Throws DimensionMismatch when y does not have Phi.rows() entries.
RealEmbedding build_embedding(const QMatrix& Phi, const QVector& y);

Eigen::VectorXd vec4(const QVector& x);
/// Throws BadLength unless the length is a multiple of 4.
QVector unvec4(const Eigen::Ref<const Eigen::VectorXd>& v);

/// Component-major stacking (y_r, y_i, y_j, y_k).
Eigen::VectorXd stack_components(const QVector& y);
QVector unstack_components(const Eigen::Ref<const Eigen::VectorXd>& v);

/// Reassembles a quaternion solution from either the 5n SOCP vector
/// (t slots skipped) or the 4n compact vector. n must be supplied so the two
/// layouts can be told apart; throws BadLength otherwise.
QVector extract_solution(const Eigen::Ref<const Eigen::VectorXd>& x_tilde, std::size_t n);

/// Standard-form SOCP data: minimize c^T z subject to A z = b and
/// ||z[5k+1 .. 5k+4]||_2 <= z[5k] for every k.
nlohmann::json socp_to_json(const RealEmbedding& emb);

}  // namespace qcs
