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

#include "qcs/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qcs/error.hpp"

namespace qcs {

namespace {

void require_kind(const nlohmann::json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind) {
    throw Error(ErrorCode::kParseError, std::string("expected a JSON object of kind ") + kind);
  }
}

void write_number(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

nlohmann::json quaternion_to_json(const Quaternion& q) { return {q.a, q.b, q.c, q.d}; }

Quaternion quaternion_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4 ||
      !std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_number(); })) {
    throw Error(ErrorCode::kParseError, "quaternion must be an array of 4 numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

nlohmann::json qvector_to_json(const QVector& x) {
  nlohmann::json data = nlohmann::json::array();
  for (const auto& q : x) data.push_back(quaternion_to_json(q));
  return {{"schema_version", kSchemaVersion}, {"kind", "qvector"}, {"size", x.size()},
          {"data", std::move(data)}};
}

QVector qvector_from_json(const nlohmann::json& j) try {
  require_kind(j, "qvector");
  const auto& data = j.at("data");
  if (data.size() != j.at("size").get<std::size_t>()) {
    throw Error(ErrorCode::kDimensionMismatch, "qvector size does not match data length");
  }
  QVector x(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) x[i] = quaternion_from_json(data[i]);
  return x;
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorCode::kParseError, std::string("malformed qvector: ") + e.what());
}

nlohmann::json qmatrix_to_json(const QMatrix& A) {
  nlohmann::json data = nlohmann::json::array();
  for (const auto& q : A.row_major()) data.push_back(quaternion_to_json(q));
  return {{"schema_version", kSchemaVersion}, {"kind", "qmatrix"}, {"rows", A.rows()},
          {"cols", A.cols()}, {"data", std::move(data)}};
}

QMatrix qmatrix_from_json(const nlohmann::json& j) try {
  require_kind(j, "qmatrix");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& data = j.at("data");
  std::vector<Quaternion> entries;
  entries.reserve(data.size());
  for (const auto& e : data) entries.push_back(quaternion_from_json(e));
  return QMatrix(rows, cols, std::move(entries));
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorCode::kParseError, std::string("malformed qmatrix: ") + e.what());
}

void write_matrix_csv(std::ostream& os, const QMatrix& A) {
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) {
      const auto comp = A(r, c).components();
      for (std::size_t e = 0; e < 4; ++e) {
        if (c != 0 || e != 0) os << ',';
        write_number(os, comp[e]);
      }
    }
    os << '\n';
  }
}

void write_vector_csv(std::ostream& os, const QVector& x) {
  for (const auto& q : x) {
    const auto comp = q.components();
    for (std::size_t e = 0; e < 4; ++e) {
      if (e != 0) os << ',';
      write_number(os, comp[e]);
    }
    os << '\n';
  }
}

nlohmann::json rip_report_to_json(const RipReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"kind", "rip_report"},
          {"s", r.s},
          {"delta", r.delta},
          {"method", method_name(r.method)},
          {"supports_examined", r.supports_examined},
          {"argmax_support", std::vector<std::size_t>(r.argmax_support.indices().begin(),
                                                      r.argmax_support.indices().end())},
          {"elapsed_seconds", r.elapsed_seconds}};
}

nlohmann::json solve_result_to_json(const SolveResult& r) {
  return {{"schema_version", kSchemaVersion},
          {"kind", "solve_result"},
          {"x_hat", qvector_to_json(r.x_hat)},
          {"iterations", r.iterations},
          {"primal_residual", r.primal_residual},
          {"dual_residual", r.dual_residual},
          {"objective", r.objective},
          {"polished", r.polished},
          {"certified", r.certified},
          {"status", status_name(r.status)},
          {"rho", r.rho},
          {"warnings", r.warnings}};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed for " + path.string());
}

}  // namespace qcs
