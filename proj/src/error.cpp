// Copyright 2026 The ssd Authors.
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

#include "ssd/error.hpp"

namespace ssd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::kNotCanonical: return "NotCanonical";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kEmptyFraction: return "EmptyFraction";
    case ErrorCode::kBadFractionCount: return "BadFractionCount";
    case ErrorCode::kUnbalancedTable: return "UnbalancedTable";
    case ErrorCode::kUnbalancedDesign: return "UnbalancedDesign";
    case ErrorCode::kNoFieldRealization: return "NoFieldRealization";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotTwoLevel: return "NotTwoLevel";
    case ErrorCode::kNotSupersaturated: return "NotSupersaturated";
    case ErrorCode::kDuplicateH: return "DuplicateH";
    case ErrorCode::kEvenS: return "EvenS";
    case ErrorCode::kNotAColumn: return "NotAColumn";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ssd
