// Copyright 2026 The minrank-keygen Authors
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
//
///////////////////////////////////////////////////////////////////////////////

#include "minrank/error.hpp"

namespace minrank {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidSplit: return "InvalidSplit";
    case ErrorCode::kRandomnessExhausted: return "RandomnessExhausted";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kMalformedKey: return "MalformedKey";
    case ErrorCode::kRetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kNonPositiveInput: return "NonPositiveInput";
    case ErrorCode::kInvalidKindParams: return "InvalidKindParams";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
  }
  return "Unknown";
}

}  // namespace minrank
