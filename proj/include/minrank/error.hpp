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

#ifndef MINRANK_ERROR_HPP_
#define MINRANK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace minrank {

enum class ErrorCode {
  kZeroInverse,
  kInvalidField,
  kDimensionMismatch,
  kIndexOutOfRange,
  kInvalidSplit,
  kRandomnessExhausted,
  kInvalidParams,
  kMalformedKey,
  kRetryLimitExceeded,
  kInternalInconsistency,
  kInvalidRank,
  kNonPositiveInput,
  kInvalidKindParams,
  kTooLarge,
  kInsufficientSamples,
};

const char* error_code_name(ErrorCode code);

// All library failures surface as this exception. Expected negative outcomes
// (singular systems, non-reducible instances, reduction aborts) are typed
// return values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minrank

#endif  // MINRANK_ERROR_HPP_
