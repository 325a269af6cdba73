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

#include "innamark/codec.h"

namespace innamark {

std::size_t DigitsPerByte(std::size_t radix) {
  if (radix < 2) {
    throw Error(ErrorCode::kDigitCount, "radix must be at least 2");
  }
  // Smallest d with radix^d >= 256, i.e. ceil(8 / log2(radix)) without
  // floating point rounding.
  std::size_t d = 0;
  std::size_t reach = 1;
  while (reach < 256) {
    reach *= radix;
    ++d;
  }
  return d;
}

std::size_t DigitsPerByte(const WhitespaceAlphabet& alphabet) {
  return DigitsPerByte(alphabet.radix());
}

DigitString EncodeBytes(std::span<const std::uint8_t> payload,
                        const WhitespaceAlphabet& alphabet) {
  const std::size_t radix = alphabet.radix();
  const std::size_t per_byte = DigitsPerByte(radix);
  DigitString out;
  out.reserve(payload.size() * per_byte);
  for (std::uint8_t byte : payload) {
    unsigned q = byte;
    for (std::size_t i = 0; i < per_byte; ++i) {
      out.push_back(alphabet.CharOf(static_cast<int>(q % radix)));
      q /= static_cast<unsigned>(radix);
    }
  }
  return out;
}

DecodedDigits DecodeDigits(std::u32string_view digits,
                           const WhitespaceAlphabet& alphabet) {
  const std::size_t radix = alphabet.radix();
  const std::size_t per_byte = DigitsPerByte(radix);
  DecodedDigits out;
  const std::size_t whole = digits.size() / per_byte;
  out.bytes.reserve(whole);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!alphabet.IsDigit(digits[i])) {
      throw Error(ErrorCode::kInvalidDigit,
                  "not a digit character: " + FormatCodePoint(digits[i]));
    }
  }
  for (std::size_t g = 0; g < whole; ++g) {
    unsigned value = 0;
    unsigned weight = 1;
    for (std::size_t y = 0; y < per_byte; ++y) {
      value += static_cast<unsigned>(*alphabet.DigitOf(digits[g * per_byte + y])) *
               weight;
      weight *= static_cast<unsigned>(radix);
    }
    // Four base-4 digits cannot exceed 255.
    out.bytes.push_back(static_cast<std::uint8_t>(value));
  }
  out.truncated_tail = digits.size() % per_byte != 0;
  return out;
}

}  // namespace innamark
