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

#include "qcs/quaternion.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qcs/error.hpp"

namespace qcs {

Quaternion inv(const Quaternion& q) {
  const double n2 = norm_squared(q);
  if (std::sqrt(n2) < 1e-300) {
    throw Error(ErrorCode::kZeroDivisor, "inverse of a zero quaternion");
  }
  return conj(q) * (1.0 / n2);
}

namespace {

void append_component(std::string& out, double v, char unit, bool leading) {
  char buf[40];
  if (leading) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%+.17g", v);
  }
  out += buf;
  if (unit != '\0') out += unit;
}

}  // namespace

std::string to_string(const Quaternion& q) {
  std::string out;
  append_component(out, q.a, '\0', true);
  append_component(out, q.b, 'i', false);
  append_component(out, q.c, 'j', false);
  append_component(out, q.d, 'k', false);
  return out;
}

Quaternion parse_quaternion(std::string_view text) {
  const std::string s(text);
  const char* p = s.c_str();
  double parts[4] = {0, 0, 0, 0};
  const char units[4] = {'\0', 'i', 'j', 'k'};
  for (int idx = 0; idx < 4; ++idx) {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) {
      throw Error(ErrorCode::kParseError, "malformed quaternion: " + s);
    }
    p = end;
    if (units[idx] != '\0') {
      if (*p != units[idx]) {
        throw Error(ErrorCode::kParseError, "malformed quaternion: " + s);
      }
      ++p;
    }
    parts[idx] = v;
  }
  if (*p != '\0') throw Error(ErrorCode::kParseError, "trailing text in quaternion: " + s);
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace qcs
