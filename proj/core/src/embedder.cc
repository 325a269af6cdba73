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

#include "innamark/embedder.h"

#include <algorithm>

#include "innamark/codec.h"
#include "innamark/error.h"
#include "innamark/tag.h"

namespace innamark {

std::size_t CountSpaces(TextView cover) {
  return static_cast<std::size_t>(std::count(cover.begin(), cover.end(), kSpace));
}

std::size_t SpacesPerCopy(std::size_t serialized_bytes,
                          const WhitespaceAlphabet& alphabet) {
  return 1 + DigitsPerByte(alphabet) * serialized_bytes;
}

std::size_t CapacityBytes(TextView cover, const TagFlags& flags,
                          const WhitespaceAlphabet& alphabet) {
  const std::size_t spaces = CountSpaces(cover);
  const std::size_t overhead = SpacesPerCopy(1 + PrefixLength(flags), alphabet);
  if (spaces < overhead) return 0;
  return (spaces - overhead) / DigitsPerByte(alphabet);
}

WatermarkResult Embed(TextView cover, std::span<const std::uint8_t> message,
                      const Options& options) {
  const std::size_t spaces = CountSpaces(cover);
  const Bytes payload = ApplyTag(message, options).Serialize();
  const DigitString digits = EncodeBytes(payload, options.alphabet);
  const std::size_t cycle = digits.size() + 1;
  if (spaces == 0) throw CapacityError(ErrorCode::kNoSpaces, cycle, 0);
  if (spaces < cycle) {
    throw CapacityError(ErrorCode::kInsufficientCapacity, cycle, spaces);
  }

  WatermarkResult result;
  result.text.reserve(cover.size());
  // Position 0 of the cycle is the separator; position k > 0 is digit k-1.
  // Restarting on the current space keeps the substitution one-to-one.
  std::size_t pos = 0;
  for (CodePoint c : cover) {
    if (c != kSpace) {
      result.text.push_back(c);
      continue;
    }
    result.text.push_back(pos == 0 ? options.alphabet.separator()
                                   : digits[pos - 1]);
    pos = (pos + 1) % cycle;
  }
  result.copies_embedded = spaces / cycle;
  const std::size_t rest = spaces % cycle;
  result.partial_tail_digits = rest > 0 ? rest - 1 : 0;
  return result;
}

}  // namespace innamark
