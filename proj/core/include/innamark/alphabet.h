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

#ifndef INNAMARK_ALPHABET_H_
#define INNAMARK_ALPHABET_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "innamark/utf8.h"

namespace innamark {

// The ordinary space, the only character the embedder ever replaces.
inline constexpr CodePoint kSpace = U' ';

// A separator plus four digit characters, all distinct and none equal to
// U+0020. Digit i encodes the base-4 value i.
//
// The default set is U+2004 (separator) with digits U+2008, U+2009, U+202F,
// U+205F in ascending code point order. That ordering is part of the wire
// format: another implementation must use the same table to interoperate.
class WhitespaceAlphabet {
 public:
  static constexpr std::size_t kDigitCount = 4;

  static WhitespaceAlphabet Default();

  // Throws Error with kDigitCount, kDuplicateCharacter or kSpaceInAlphabet.
  static WhitespaceAlphabet Create(CodePoint separator,
                                   std::span<const CodePoint> digits);

  // Parses five "U+XXXX" tokens, separator first.
  static WhitespaceAlphabet Parse(std::span<const std::string> tokens);

  CodePoint separator() const { return separator_; }
  std::span<const CodePoint, kDigitCount> digits() const { return digits_; }
  std::size_t radix() const { return kDigitCount; }

  std::optional<int> DigitOf(CodePoint c) const;

  // Throws Error(kDigitRange) unless 0 <= value < 4.
  CodePoint CharOf(int value) const;

  bool IsDigit(CodePoint c) const { return DigitOf(c).has_value(); }

  // Member of the full five-character set, separator included.
  bool Contains(CodePoint c) const { return c == separator_ || IsDigit(c); }

  // "U+XXXX" strings, separator first.
  std::vector<std::string> ToStrings() const;

  friend bool operator==(const WhitespaceAlphabet&,
                         const WhitespaceAlphabet&) = default;

 private:
  WhitespaceAlphabet(CodePoint separator,
                     std::array<CodePoint, kDigitCount> digits)
      : separator_(separator), digits_(digits) {}

  CodePoint separator_;
  std::array<CodePoint, kDigitCount> digits_;
};

std::string FormatCodePoint(CodePoint c);

// Accepts "U+XXXX" (case-insensitive prefix, 4 to 6 hex digits).
CodePoint ParseCodePoint(std::string_view token);

}  // namespace innamark

#endif  // INNAMARK_ALPHABET_H_
