// Copyright 2026 The Innamark Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "innamark/error.h"

namespace innamark {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateCharacter:
      return "duplicate-character";
    case ErrorCode::kSpaceInAlphabet:
      return "space-in-alphabet";
    case ErrorCode::kDigitCount:
      return "digit-count";
    case ErrorCode::kDigitRange:
      return "digit-range";
    case ErrorCode::kInvalidDigit:
      return "invalid-digit";
    case ErrorCode::kUnknownTag:
      return "unknown-tag";
    case ErrorCode::kMissingKey:
      return "missing-key";
    case ErrorCode::kNoSpaces:
      return "no-spaces";
    case ErrorCode::kInsufficientCapacity:
      return "insufficient-capacity";
    case ErrorCode::kNoMarks:
      return "no-marks";
    case ErrorCode::kUnrecoverable:
      return "unrecoverable";
    case ErrorCode::kCrcMismatch:
      return "crc-mismatch";
    case ErrorCode::kHashMismatch:
      return "hash-mismatch";
    case ErrorCode::kSizeMismatch:
      return "size-mismatch";
    case ErrorCode::kDecryptFailure:
      return "decrypt-failure";
    case ErrorCode::kDecompressFailure:
      return "decompress-failure";
    case ErrorCode::kTruncatedPrefix:
      return "truncated-prefix";
    case ErrorCode::kInvalidUtf8:
      return "invalid-utf8";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
  }
  return "unknown";
}

CapacityError::CapacityError(ErrorCode code, std::size_t required,
                             std::size_t available)
    : Error(code, std::string(ErrorCodeName(code)) + ": requires " +
                      std::to_string(required) + " spaces, cover has " +
                      std::to_string(available)),
      required_(required),
      available_(available) {}

}  // namespace innamark
