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

#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.h"
#include "innamark/codec.h"
#include "innamark/error.h"
#include "innamark/extractor.h"
#include "innamark/tag.h"

namespace innamark {
namespace {

const WhitespaceAlphabet kAlphabet = WhitespaceAlphabet::Default();

Bytes Ascii(std::string_view s) { return Bytes(s.begin(), s.end()); }

Text WithSpaces(std::size_t n) {
  Text t = U"w";
  for (std::size_t i = 0; i < n; ++i) t += U" w";
  return t;
}

Text Unmark(TextView marked) {
  Text out(marked);
  for (CodePoint& c : out) {
    if (kAlphabet.Contains(c)) c = kSpace;
  }
  return out;
}

TEST(EmbedderTest, CountSpaces) {
  EXPECT_EQ(CountSpaces(U"a b c"), 2u);
  EXPECT_EQ(CountSpaces(U"a\tb\nc"), 0u);
  EXPECT_EQ(CountSpaces(U""), 0u);
  EXPECT_EQ(CountSpaces(U"a\u00A0b\u2004c"), 0u);
}

TEST(EmbedderTest, CapacityClosedForm) {
  EXPECT_EQ(CapacityBytes(WithSpaces(21), {}), 4u);
  EXPECT_EQ(CapacityBytes(WithSpaces(4), {}), 0u);
  EXPECT_EQ(CapacityBytes(WithSpaces(21), {.crc32 = true}), 0u);
  EXPECT_EQ(CapacityBytes(WithSpaces(25), {.crc32 = true}), 1u);
  EXPECT_EQ(CapacityBytes(U"", {}), 0u);
}

TEST(EmbedderTest, NoSpacesError) {
  try {
    Embed(U"nospaceshere", Ascii("J"));
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSpaces);
    EXPECT_EQ(e.available(), 0u);
    EXPECT_EQ(e.required(), 9u);
  }
}

TEST(EmbedderTest, InsufficientCapacityError) {
  try {
    Embed(U"a b", Ascii("J"));
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientCapacity);
    EXPECT_EQ(e.required(), 9u);
    EXPECT_EQ(e.available(), 1u);
  }
}

TEST(EmbedderTest, StreamIsSeparatorThenPayloadRepeated) {
  // One copy of the default-tagged "John" takes 1 + 4 * 5 = 21 spaces.
  const Text cover = WithSpaces(50);
  const WatermarkResult r = Embed(cover, Ascii("John"));
  const Bytes payload = {0x00, 'J', 'o', 'h', 'n'};
  const DigitString digits = EncodeBytes(payload, kAlphabet);
  Text expected_marks;
  for (std::size_t i = 0; i < 50; ++i) {
    expected_marks.push_back(i % 21 == 0 ? kAlphabet.separator()
                                         : digits[i % 21 - 1]);
  }
  Text marks;
  for (CodePoint c : r.text) {
    if (kAlphabet.Contains(c)) marks.push_back(c);
  }
  EXPECT_EQ(marks, expected_marks);
  EXPECT_EQ(r.copies_embedded, 2u);
  EXPECT_EQ(r.partial_tail_digits, 7u);
}

TEST(EmbedderTest, ExactFitHasNoTail) {
  const WatermarkResult r = Embed(WithSpaces(21), Ascii("John"));
  EXPECT_EQ(r.copies_embedded, 1u);
  EXPECT_EQ(r.partial_tail_digits, 0u);
  // A new copy that only gets its separator counts as a zero-digit tail.
  const WatermarkResult r2 = Embed(WithSpaces(22), Ascii("John"));
  EXPECT_EQ(r2.copies_embedded, 1u);
  EXPECT_EQ(r2.partial_tail_digits, 0u);
  EXPECT_EQ(r2.text.back(), U'w');
}

TEST(EmbedderTest, PropertiesOverRandomCovers) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Bytes message = testing::RandomBytes(rng, rng() % 12);
    const std::size_t need = 1 + 4 * (1 + message.size());
    const Text cover = testing::RandomCover(rng, need + rng() % 200);
    const WatermarkResult r = Embed(cover, message);
    ASSERT_EQ(r.text.size(), cover.size());
    ASSERT_EQ(CountSpaces(r.text), 0u);
    ASSERT_EQ(Unmark(r.text), cover);
    ASSERT_GE(r.copies_embedded, 1u);
    ASSERT_EQ(ExtractLiteral(r.text).message, message);
    ASSERT_EQ(ExtractRobust(r.text).message, message);
  }
}

TEST(EmbedderTest, CustomAlphabet) {
  Options o;
  const std::vector<std::string> tokens = {"U+2000", "U+2001", "U+2002",
                                           "U+2003", "U+2005"};
  o.alphabet = WhitespaceAlphabet::Parse(tokens);
  const WatermarkResult r = Embed(WithSpaces(30), Ascii("Hi"), o);
  EXPECT_EQ(r.text[1], U'\u2000');
  EXPECT_EQ(ExtractRobust(r.text, o).message, Ascii("Hi"));
  EXPECT_THROW(ExtractRobust(r.text), Error);  // default alphabet sees nothing
}

TEST(EmbedderTest, OutputIsDeterministic) {
  Options o;
  o.flags = {.compression = true, .hashing = true, .crc32 = true, .size_prefix = true};
  const Text cover = WithSpaces(400);
  EXPECT_EQ(Embed(cover, Ascii("same input"), o).text,
            Embed(cover, Ascii("same input"), o).text);
}

}  // namespace
}  // namespace innamark
