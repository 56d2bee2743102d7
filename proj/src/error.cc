// Copyright 2026 The amegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amegraph/error.h"

namespace amegraph {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kNotPrime:
            return "NotPrime";
        case ErrorCode::kNotInvertible:
            return "NotInvertible";
        case ErrorCode::kSingular:
            return "Singular";
        case ErrorCode::kDimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::kSelfLoop:
            return "SelfLoop";
        case ErrorCode::kDuplicateEdge:
            return "DuplicateEdge";
        case ErrorCode::kWeightOutOfRange:
            return "WeightOutOfRange";
        case ErrorCode::kVertexOutOfRange:
            return "VertexOutOfRange";
        case ErrorCode::kInvalidRewrite:
            return "InvalidRewrite";
        case ErrorCode::kUnequalGroups:
            return "UnequalGroups";
        case ErrorCode::kSingularU:
            return "SingularU";
        case ErrorCode::kInvalidY:
            return "InvalidY";
        case ErrorCode::kInvalidInput:
            return "InvalidInput";
        case ErrorCode::kInternalError:
            return "InternalError";
        case ErrorCode::kTooLarge:
            return "TooLarge";
        case ErrorCode::kNotAmeCode:
            return "NotAmeCode";
        case ErrorCode::kPointsNotDistinct:
            return "PointsNotDistinct";
        case ErrorCode::kLengthExceedsField:
            return "LengthExceedsField";
        case ErrorCode::kZeroProbability:
            return "ZeroProbability";
        case ErrorCode::kNotAuthorized:
            return "NotAuthorized";
        case ErrorCode::kNotAme:
            return "NotAme";
        case ErrorCode::kMissingWitness:
            return "MissingWitness";
        case ErrorCode::kBudgetExceeded:
            return "BudgetExceeded";
        case ErrorCode::kParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace amegraph
