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

#include "qcs/embedding.hpp"

#include <string>

#include "qcs/error.hpp"

namespace qcs {

Eigen::Matrix4d left_multiplication_block(const Quaternion& phi) {
  const double r = phi.a, i = phi.b, j = phi.c, k = phi.d;
  Eigen::Matrix4d B;
  B << r, -i, -j, -k,
       i, r, -k, j,
       j, k, r, -i,
       k, -j, i, r;
  return B;
}

Eigen::MatrixXd compact_operator(const QMatrix& Phi) {
  const auto m = static_cast<Eigen::Index>(Phi.rows());
  const auto n = static_cast<Eigen::Index>(Phi.cols());
  Eigen::MatrixXd A(4 * m, 4 * n);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      A.block<4, 4>(4 * r, 4 * c) =
          left_multiplication_block(Phi(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
    }
  }
  return A;
}

RealEmbedding build_embedding(const QMatrix& Phi, const QVector& y) {
  if (y.size() != Phi.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "measurement vector has " + std::to_string(y.size()) + " entries, matrix has " +
                    std::to_string(Phi.rows()) + " rows");
  }
  RealEmbedding emb;
  emb.m = Phi.rows();
  emb.n = Phi.cols();
  const auto m = static_cast<Eigen::Index>(emb.m);
  const auto n = static_cast<Eigen::Index>(emb.n);

  emb.A_compact = compact_operator(Phi);
  emb.A_socp = Eigen::MatrixXd::Zero(4 * m, 5 * n);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Eigen::Matrix4d B = emb.A_compact.block<4, 4>(4 * r, 4 * c);
      for (Eigen::Index e = 0; e < 4; ++e) {
        for (Eigen::Index f = 0; f < 4; ++f) emb.A_socp(e * m + r, 5 * c + 1 + f) = B(e, f);
      }
    }
  }
  emb.y_tilde = stack_components(y);
  emb.c = Eigen::VectorXd::Zero(5 * n);
  for (Eigen::Index k = 0; k < n; ++k) emb.c[5 * k] = 1.0;
  return emb;
}

Eigen::VectorXd vec4(const QVector& x) {
  Eigen::VectorXd v(4 * static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto base = static_cast<Eigen::Index>(4 * i);
    v[base] = x[i].a;
    v[base + 1] = x[i].b;
    v[base + 2] = x[i].c;
    v[base + 3] = x[i].d;
  }
  return v;
}

QVector unvec4(const Eigen::Ref<const Eigen::VectorXd>& v) {
  if (v.size() % 4 != 0) {
    throw Error(ErrorCode::kBadLength,
                "length " + std::to_string(v.size()) + " is not a multiple of 4");
  }
  QVector x(static_cast<std::size_t>(v.size() / 4));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto base = static_cast<Eigen::Index>(4 * i);
    x[i] = Quaternion(v[base], v[base + 1], v[base + 2], v[base + 3]);
  }
  return x;
}

Eigen::VectorXd stack_components(const QVector& y) {
  const auto m = static_cast<Eigen::Index>(y.size());
  Eigen::VectorXd v(4 * m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Quaternion& q = y[static_cast<std::size_t>(r)];
    v[r] = q.a;
    v[m + r] = q.b;
    v[2 * m + r] = q.c;
    v[3 * m + r] = q.d;
  }
  return v;
}

QVector unstack_components(const Eigen::Ref<const Eigen::VectorXd>& v) {
  if (v.size() % 4 != 0) {
    throw Error(ErrorCode::kBadLength,
                "length " + std::to_string(v.size()) + " is not a multiple of 4");
  }
  const Eigen::Index m = v.size() / 4;
  QVector y(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) {
    y[static_cast<std::size_t>(r)] = Quaternion(v[r], v[m + r], v[2 * m + r], v[3 * m + r]);
  }
  return y;
}

QVector extract_solution(const Eigen::Ref<const Eigen::VectorXd>& x_tilde, std::size_t n) {
  const auto len = static_cast<std::size_t>(x_tilde.size());
  if (len == 4 * n) return unvec4(x_tilde);
  if (len != 5 * n) {
    throw Error(ErrorCode::kBadLength, "solution length " + std::to_string(len) +
                                           " matches neither 4n nor 5n for n = " +
                                           std::to_string(n));
  }
  QVector x(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto base = static_cast<Eigen::Index>(5 * k);
    x[k] = Quaternion(x_tilde[base + 1], x_tilde[base + 2], x_tilde[base + 3], x_tilde[base + 4]);
  }
  return x;
}

nlohmann::json socp_to_json(const RealEmbedding& emb) {
  nlohmann::json A = nlohmann::json::array();
  for (Eigen::Index r = 0; r < emb.A_socp.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < emb.A_socp.cols(); ++c) row.push_back(emb.A_socp(r, c));
    A.push_back(std::move(row));
  }
  nlohmann::json cones = nlohmann::json::array();
  for (std::size_t k = 0; k < emb.n; ++k) {
    cones.push_back({{"type", "soc"}, {"head", 5 * k}, {"tail", {5 * k + 1, 5 * k + 2, 5 * k + 3, 5 * k + 4}}});
  }
  return {
      {"schema_version", 1},
      {"kind", "socp"},
      {"m", emb.m},
      {"n", emb.n},
      {"objective", "minimize c^T z"},
      {"equality", "A z = b"},
      {"variable_layout", "(t_k, z_r_k, z_i_k, z_j_k, z_k_k) for k = 0..n-1"},
      {"row_layout", "component-major: real rows, then i, j, k rows"},
      {"A", std::move(A)},
      {"b", std::vector<double>(emb.y_tilde.data(), emb.y_tilde.data() + emb.y_tilde.size())},
      {"c", std::vector<double>(emb.c.data(), emb.c.data() + emb.c.size())},
      {"cones", std::move(cones)},
  };
}

}  // namespace qcs
