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

#ifndef AMEGRAPH_ERROR_H
#define AMEGRAPH_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace amegraph {

enum class ErrorCode {
    kInvalidArgument,
    kNotPrime,
    kNotInvertible,
    kSingular,
    kDimensionMismatch,
    kSelfLoop,
    kDuplicateEdge,
    kWeightOutOfRange,
    kVertexOutOfRange,
    kInvalidRewrite,
    kUnequalGroups,
    kSingularU,
    kInvalidY,
    kInvalidInput,
    kInternalError,
    kTooLarge,
    kNotAmeCode,
    kPointsNotDistinct,
    kLengthExceedsField,
    kZeroProbability,
    kNotAuthorized,
    kNotAme,
    kMissingWitness,
    kBudgetExceeded,
    kParseError,
};

std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by the library. The code identifies the
/// failure class; the message carries the specifics.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace amegraph

#endif
