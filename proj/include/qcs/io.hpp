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

#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>

#include "qcs/qlinalg.hpp"
#include "qcs/rip.hpp"
#include "qcs/solver.hpp"

namespace qcs {

inline constexpr int kSchemaVersion = 1;

// Quaternions travel as [a, b, c, d].
nlohmann::json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

// {"schema_version", "kind": "qvector", "size", "data": [[a,b,c,d], ...]}
nlohmann::json qvector_to_json(const QVector& x);
QVector qvector_from_json(const nlohmann::json& j);

// {"schema_version", "kind": "qmatrix", "rows", "cols", "data": row-major
// list of [a,b,c,d]}
nlohmann::json qmatrix_to_json(const QMatrix& A);
QMatrix qmatrix_from_json(const nlohmann::json& j);

/// One line per matrix row, four columns (a,b,c,d) per entry.
void write_matrix_csv(std::ostream& os, const QMatrix& A);
/// One line per entry: a,b,c,d.
void write_vector_csv(std::ostream& os, const QVector& x);

nlohmann::json rip_report_to_json(const RipReport& r);
nlohmann::json solve_result_to_json(const SolveResult& r);

/// Throws IoFailure / ParseError.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qcs
