// Copyright 2026 The trss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trss/errors.h"

namespace trss {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kModulusMismatch:
      return "ModulusMismatch";
    case ErrorCode::kZeroInverse:
      return "ZeroInverse";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kInsufficientShares:
      return "InsufficientShares";
    case ErrorCode::kTimeMismatch:
      return "TimeMismatch";
    case ErrorCode::kDuplicateShare:
      return "DuplicateShare";
    case ErrorCode::kMissingPublicParams:
      return "MissingPublicParams";
    case ErrorCode::kCapacityExceeded:
      return "CapacityExceeded";
    case ErrorCode::kEnumerationTooLarge:
      return "EnumerationTooLarge";
    case ErrorCode::kUnknownSelector:
      return "UnknownSelector";
    case ErrorCode::kRandomnessExhausted:
      return "RandomnessExhausted";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace trss
