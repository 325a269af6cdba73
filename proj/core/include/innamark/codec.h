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

#ifndef INNAMARK_CODEC_H_
#define INNAMARK_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "innamark/alphabet.h"
#include "innamark/error.h"
#include "innamark/utf8.h"

namespace innamark {

// A run of digit characters of one alphabet. Never contains the separator
// or U+0020.
using DigitString = std::u32string;

// ceil(8 / log2(radix)): digits needed to represent one byte.
std::size_t DigitsPerByte(std::size_t radix);
std::size_t DigitsPerByte(const WhitespaceAlphabet& alphabet);

// Each byte becomes DigitsPerByte() digits, least significant first.
DigitString EncodeBytes(std::span<const std::uint8_t> payload,
                        const WhitespaceAlphabet& alphabet);

struct DecodedDigits {
  Bytes bytes;
  // Set when a trailing group shorter than DigitsPerByte() was dropped.
  bool truncated_tail = false;
};

// Inverse of EncodeBytes(). Throws Error(kInvalidDigit) for characters
// outside the digit set.
DecodedDigits DecodeDigits(std::u32string_view digits,
                           const WhitespaceAlphabet& alphabet);

}  // namespace innamark

#endif  // INNAMARK_CODEC_H_
