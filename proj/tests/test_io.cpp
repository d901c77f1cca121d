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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "qcs/error.hpp"
#include "qcs/io.hpp"

namespace qcs {
namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("qcs_io_" + name);
  std::filesystem::remove_all(p);
  return p;
}

TEST(Io, RoundTripsAreExact) {
  testing::TestRng rng(1);
  const QVector x = rng.vector(5);
  EXPECT_EQ(qvector_from_json(nlohmann::json::parse(qvector_to_json(x).dump())), x);
  const QMatrix A = rng.matrix(3, 4);
  EXPECT_EQ(qmatrix_from_json(nlohmann::json::parse(qmatrix_to_json(A).dump())), A);
  EXPECT_EQ(qmatrix_to_json(A).at("schema_version"), kSchemaVersion);
}

TEST(Io, MalformedDocuments) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidConfig;
  };
  EXPECT_EQ(code_of([] { (void)quaternion_from_json(nlohmann::json::array({1, 2, 3})); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { (void)quaternion_from_json(nlohmann::json::array({1, 2, 3, "x"})); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { (void)qvector_from_json(nlohmann::json{{"kind", "qmatrix"}}); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { (void)qvector_from_json(nlohmann::json{{"kind", "qvector"}}); }),
            ErrorCode::kParseError);
  nlohmann::json bad = qmatrix_to_json(QMatrix(2, 2));
  bad["rows"] = 3;
  EXPECT_EQ(code_of([&] { (void)qmatrix_from_json(bad); }), ErrorCode::kDimensionMismatch);
}

TEST(Io, CsvLayout) {
  std::ostringstream os;
  write_vector_csv(os, QVector{Quaternion(1, 2, 3, 4), Quaternion(0.5)});
  EXPECT_EQ(os.str(), "1,2,3,4\n0.5,0,0,0\n");
  std::ostringstream om;
  write_matrix_csv(om, QMatrix(1, 2, {Quaternion(1, 2, 3, 4), Quaternion(5, 6, 7, 8)}));
  EXPECT_EQ(om.str(), "1,2,3,4,5,6,7,8\n");
}

TEST(Io, Files) {
  const auto dir = temp_dir("files");
  const auto file = dir / "nested" / "doc.json";
  write_text_file(file, "{\"a\": 1}\n");
  EXPECT_EQ(read_json_file(file).at("a"), 1);
  try {
    (void)read_json_file(dir / "missing.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoFailure);
  }
  write_text_file(dir / "broken.json", "{not json");
  try {
    (void)read_json_file(dir / "broken.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qcs
