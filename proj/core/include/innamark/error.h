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

#ifndef INNAMARK_ERROR_H_
#define INNAMARK_ERROR_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace innamark {

using Bytes = std::vector<std::uint8_t>;

// Every failure the library reports. The names returned by ErrorCodeName()
// are stable and appear verbatim in CLI diagnostics.
enum class ErrorCode {
  kDuplicateCharacter,
  kSpaceInAlphabet,
  kDigitCount,
  kDigitRange,
  kInvalidDigit,
  kUnknownTag,
  kMissingKey,
  kNoSpaces,
  kInsufficientCapacity,
  kNoMarks,
  kUnrecoverable,
  kCrcMismatch,
  kHashMismatch,
  kSizeMismatch,
  kDecryptFailure,
  kDecompressFailure,
  kTruncatedPrefix,
  kInvalidUtf8,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the embedder when the cover cannot hold one full copy.
class CapacityError : public Error {
 public:
  CapacityError(ErrorCode code, std::size_t required, std::size_t available);

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

}  // namespace innamark

#endif  // INNAMARK_ERROR_H_
