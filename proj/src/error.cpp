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

#include "qcs/error.hpp"

namespace qcs {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroDivisor: return "ZeroDivisor";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidVariance: return "InvalidVariance";
    case ErrorCode::kSparsityOutOfRange: return "SparsityOutOfRange";
    case ErrorCode::kBadLength: return "BadLength";
    case ErrorCode::kFactorizationFailure: return "FactorizationFailure";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDegenerateDelta: return "DegenerateDelta";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kSkippedPoint: return "SkippedPoint";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qcs
