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

#include "innamark/alphabet.h"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "innamark/error.h"

namespace innamark {

WhitespaceAlphabet WhitespaceAlphabet::Default() {
  return WhitespaceAlphabet(U'\u2004',
                            {U'\u2008', U'\u2009', U'\u202F', U'\u205F'});
}

WhitespaceAlphabet WhitespaceAlphabet::Create(
    CodePoint separator, std::span<const CodePoint> digits) {
  if (digits.size() != kDigitCount) {
    throw Error(ErrorCode::kDigitCount,
                "alphabet needs exactly 4 digit characters, got " +
                    std::to_string(digits.size()));
  }
  std::vector<CodePoint> all(digits.begin(), digits.end());
  all.push_back(separator);
  if (std::find(all.begin(), all.end(), kSpace) != all.end()) {
    throw Error(ErrorCode::kSpaceInAlphabet,
                "U+0020 cannot be part of the alphabet");
  }
  std::sort(all.begin(), all.end());
  if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end()) {
    throw Error(ErrorCode::kDuplicateCharacter,
                "duplicate alphabet character " + FormatCodePoint(*it));
  }
  std::array<CodePoint, kDigitCount> d;
  std::copy(digits.begin(), digits.end(), d.begin());
  return WhitespaceAlphabet(separator, d);
}

WhitespaceAlphabet WhitespaceAlphabet::Parse(
    std::span<const std::string> tokens) {
  if (tokens.size() != kDigitCount + 1) {
    throw Error(ErrorCode::kDigitCount,
                "alphabet needs 5 code points (separator first), got " +
                    std::to_string(tokens.size()));
  }
  std::array<CodePoint, kDigitCount> digits;
  for (std::size_t i = 0; i < kDigitCount; ++i) {
    digits[i] = ParseCodePoint(tokens[i + 1]);
  }
  return Create(ParseCodePoint(tokens[0]), digits);
}

std::optional<int> WhitespaceAlphabet::DigitOf(CodePoint c) const {
  for (std::size_t i = 0; i < kDigitCount; ++i) {
    if (digits_[i] == c) return static_cast<int>(i);
  }
  return std::nullopt;
}

CodePoint WhitespaceAlphabet::CharOf(int value) const {
  if (value < 0 || value >= static_cast<int>(kDigitCount)) {
    throw Error(ErrorCode::kDigitRange,
                "digit value out of range: " + std::to_string(value));
  }
  return digits_[static_cast<std::size_t>(value)];
}

std::vector<std::string> WhitespaceAlphabet::ToStrings() const {
  std::vector<std::string> out{FormatCodePoint(separator_)};
  for (CodePoint c : digits_) out.push_back(FormatCodePoint(c));
  return out;
}

std::string FormatCodePoint(CodePoint c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
  return buf;
}

CodePoint ParseCodePoint(std::string_view token) {
  auto bad = [&] {
    return Error(ErrorCode::kInvalidArgument,
                 "expected U+XXXX code point, got '" + std::string(token) +
                     "'");
  };
  if (token.size() < 6 || token.size() > 8 ||
      std::toupper(static_cast<unsigned char>(token[0])) != 'U' ||
      token[1] != '+') {
    throw bad();
  }
  std::uint32_t value = 0;
  for (char ch : token.substr(2)) {
    if (!std::isxdigit(static_cast<unsigned char>(ch))) throw bad();
    const int nibble = std::isdigit(static_cast<unsigned char>(ch))
                           ? ch - '0'
                           : std::toupper(static_cast<unsigned char>(ch)) -
                                 'A' + 10;
    value = value * 16 + static_cast<std::uint32_t>(nibble);
  }
  if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) throw bad();
  return static_cast<CodePoint>(value);
}

}  // namespace innamark
