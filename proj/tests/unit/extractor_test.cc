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

#include "innamark/extractor.h"

#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.h"
#include "innamark/bench/corpus.h"
#include "innamark/bench/tamper.h"
#include "innamark/embedder.h"
#include "innamark/error.h"
#include "innamark/tag.h"

namespace innamark {
namespace {

const WhitespaceAlphabet kAlphabet = WhitespaceAlphabet::Default();
constexpr CodePoint kSep = U'\u2004';

Bytes Ascii(std::string_view s) { return Bytes(s.begin(), s.end()); }

Text WithSpaces(std::size_t n) {
  Text t = U"w";
  for (std::size_t i = 0; i < n; ++i) t += U" w";
  return t;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(SegmentsTest, Basics) {
  EXPECT_TRUE(Segments(U"plain text", kAlphabet).empty());
  const Text one = Text(U"x") + kSep + U"\u2008\u2009\u202F\u205F";
  const auto s = Segments(one, kAlphabet);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].digits.size(), 4u);
  EXPECT_TRUE(s[0].anchored);
  EXPECT_FALSE(s[0].terminated);
}

TEST(SegmentsTest, ThreeCopyEmbed) {
  // 21 spaces per copy; 2 full copies and a 10-digit tail.
  const Text marked = Embed(WithSpaces(53), Ascii("John")).text;
  const auto s = Segments(marked, kAlphabet);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].digits, s[1].digits);
  EXPECT_EQ(s[0].digits.size(), 20u);
  EXPECT_EQ(s[2].digits.size(), 10u);
  EXPECT_TRUE(s[0].terminated);
  EXPECT_FALSE(s[2].terminated);
}

TEST(SegmentsTest, LeadingRunIsUnanchored) {
  const Text t = Text(U"\u2008\u2008") + kSep + U"\u2009";
  const auto s = Segments(t, kAlphabet);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_FALSE(s[0].anchored);
  EXPECT_TRUE(s[1].anchored);
}

TEST(ExtractLiteralTest, WorkedExample) {
  const Text cover(bench::LoremIpsum());
  const Text marked = Embed(cover, Ascii("John")).text;
  const ExtractResult r = ExtractLiteral(marked);
  EXPECT_EQ(r.message, Ascii("John"));
  EXPECT_GE(r.segments_found, 1u);
  EXPECT_EQ(r.mode, ExtractMode::kLiteral);
}

TEST(ExtractLiteralTest, NoMarks) {
  EXPECT_EQ(CodeOf([] { ExtractLiteral(U"plain text, no marks"); }),
            ErrorCode::kNoMarks);
}

TEST(ExtractLiteralTest, StopsAtFirstCompleteCopy) {
  Text marked = Embed(WithSpaces(42), Ascii("John")).text;
  // Drop the end of the second copy.
  marked.resize(marked.size() - 10);
  const ExtractResult r = ExtractLiteral(marked);
  EXPECT_EQ(r.message, Ascii("John"));
  EXPECT_TRUE(r.warnings.empty());
}

TEST(ExtractLiteralTest, CollectsDigitsBeforeFirstSeparator) {
  // A stray digit ahead of the first separator is kept by the literal scan,
  // which then misreads the payload; robust mode skips it.
  Text marked = Embed(WithSpaces(42), Ascii("John")).text;
  marked = Text(U"\u2008") + marked;
  const TagAnalysis lit = [&] {
    try {
      return TagAnalysis{ExtractLiteral(marked).message, {}, {}};
    } catch (const Error& e) {
      return TagAnalysis{{}, e.code(), {}};
    }
  }();
  EXPECT_NE(lit.message, std::optional<Bytes>(Ascii("John")));
  const ExtractResult robust = ExtractRobust(marked);
  EXPECT_EQ(robust.message, Ascii("John"));
  EXPECT_TRUE(robust.HasWarning(ExtractWarning::kGarbagePrefixSkipped));
}

TEST(ExtractLiteralTest, PropagatesTagErrors) {
  Options crc;
  crc.flags.crc32 = true;
  // 1 + 4 * 7 = 29 spaces per copy; two full copies.
  Text marked = Embed(WithSpaces(60), Ascii("Jo"), crc).text;
  // Flip the lowest bit of the first body digit (space index 1 + 4 * 5).
  std::size_t seen = 0;
  for (CodePoint& c : marked) {
    if (!kAlphabet.Contains(c)) continue;
    if (seen++ == 21) {
      c = kAlphabet.CharOf(*kAlphabet.DigitOf(c) ^ 1);
      break;
    }
  }
  EXPECT_EQ(CodeOf([&] { ExtractLiteral(marked); }), ErrorCode::kCrcMismatch);
  // The second copy is intact, so robust mode recovers.
  const ExtractResult r = ExtractRobust(marked);
  EXPECT_EQ(r.message, Ascii("Jo"));
  EXPECT_EQ(r.segments_valid, 1u);
}

TEST(ExtractRobustTest, AgreesWithLiteralOnCleanText) {
  const Text marked = Embed(WithSpaces(21), Ascii("John")).text;
  const ExtractResult lit = ExtractLiteral(marked);
  const ExtractResult rob = ExtractRobust(marked);
  EXPECT_EQ(lit.message, rob.message);
  EXPECT_EQ(rob.segments_found, 1u);
  EXPECT_EQ(rob.segments_valid, 1u);
  EXPECT_TRUE(rob.warnings.empty());
}

TEST(ExtractRobustTest, SurvivesMiddleBlockOverwrite) {
  std::mt19937_64 rng(3);
  const Text cover = testing::RandomCover(rng, 5 * 21 + 3);
  const Text marked = Embed(cover, Ascii("John")).text;
  Text tampered = marked;
  const std::size_t block = cover.size() / 10;
  const std::size_t start = cover.size() / 2 - block / 2;
  std::fill_n(tampered.begin() + static_cast<std::ptrdiff_t>(start), block, U'a');
  const ExtractResult r = ExtractRobust(tampered);
  EXPECT_EQ(r.message, Ascii("John"));
  EXPECT_GE(r.segments_valid, 1u);
}

TEST(ExtractRobustTest, AllMarksDestroyed) {
  Text marked = Embed(WithSpaces(60), Ascii("John")).text;
  for (CodePoint& c : marked) {
    if (kAlphabet.Contains(c)) c = kSpace;
  }
  EXPECT_EQ(CodeOf([&] { ExtractRobust(marked); }), ErrorCode::kNoMarks);
}

TEST(ExtractRobustTest, SeparatorsOnlyIsUnrecoverable) {
  const Text t = Text(U"a") + kSep + U"b" + kSep;
  EXPECT_EQ(CodeOf([&] { ExtractRobust(t); }), ErrorCode::kUnrecoverable);
}

TEST(ExtractRobustTest, PluralityBeatsEarlierGarbage) {
  // An option-free copy has no checksum: a damaged first copy still parses,
  // but the two intact copies after it outvote it.
  Text marked = Embed(WithSpaces(63), Ascii("John")).text;
  std::size_t seen = 0;
  for (CodePoint& c : marked) {
    if (!kAlphabet.Contains(c)) continue;
    if (seen++ == 7) {
      c = kAlphabet.CharOf(*kAlphabet.DigitOf(c) ^ 2);
      break;
    }
  }
  const ExtractResult r = ExtractRobust(marked);
  EXPECT_EQ(r.message, Ascii("John"));
  EXPECT_EQ(r.segments_valid, 3u);
}

TEST(ExtractRobustTest, MajorityVoteRepairsEveryCopy) {
  Options crc;
  crc.flags.crc32 = true;
  // 1 + 4 * (1 + 4 + 4) = 37 spaces per copy; three copies.
  Text marked = Embed(WithSpaces(111), Ascii("John"), crc).text;
  // Damage a different digit in each copy.
  std::size_t seen = 0;
  for (CodePoint& c : marked) {
    if (!kAlphabet.Contains(c)) continue;
    const std::size_t index = seen++;
    if (index == 25 || index == 37 + 30 || index == 74 + 35) {
      c = kAlphabet.CharOf(*kAlphabet.DigitOf(c) ^ 3);
    }
  }
  EXPECT_EQ(CodeOf([&] { ExtractLiteral(marked, crc); }), ErrorCode::kCrcMismatch);
  const ExtractResult r = ExtractRobust(marked, crc);
  EXPECT_EQ(r.message, Ascii("John"));
  EXPECT_EQ(r.segments_valid, 0u);
  EXPECT_TRUE(r.HasWarning(ExtractWarning::kMajorityVote));
}

TEST(ExtractRobustTest, BestEffortIsFlagged) {
  Options crc;
  crc.flags.crc32 = true;
  Text marked = Embed(WithSpaces(37), Ascii("John"), crc).text;
  std::size_t seen = 0;
  for (CodePoint& c : marked) {
    if (!kAlphabet.Contains(c)) continue;
    if (seen++ == 30) {
      c = kAlphabet.CharOf(*kAlphabet.DigitOf(c) ^ 1);
      break;
    }
  }
  const ExtractResult r = ExtractRobust(marked, crc);
  EXPECT_TRUE(r.HasWarning(ExtractWarning::kValidityFailed));
  EXPECT_EQ(r.segments_valid, 0u);
}

TEST(ExtractRobustTest, EncryptedCopiesDecryptOnce) {
  Options enc;
  enc.flags = {.encryption = true, .compression = true, .crc32 = true};
  enc.passphrase = "pw";
  enc.transforms = TransformSuite::Fast();
  std::mt19937_64 rng(8);
  const Text cover = testing::RandomCover(rng, 2000);
  const Text marked = Embed(cover, Ascii("classified"), enc).text;
  const ExtractResult r = ExtractRobust(marked, enc);
  EXPECT_EQ(r.message, Ascii("classified"));
  EXPECT_GE(r.segments_valid, 2u);
  ASSERT_TRUE(r.flags.has_value());
  EXPECT_TRUE(r.flags->encryption);
}

TEST(ExtractRobustTest, NeverReturnsUnverifiedAsValid) {
  std::mt19937_64 rng(99);
  Options crc;
  crc.flags.crc32 = true;
  for (int trial = 0; trial < 200; ++trial) {
    const Bytes message = testing::RandomBytes(rng, 1 + rng() % 6);
    const Text cover = testing::RandomCover(rng, 40 + rng() % 300);
    Text marked;
    try {
      marked = Embed(cover, message, crc).text;
    } catch (const CapacityError&) {
      continue;
    }
    const Text tampered = bench::TamperReplace(
        marked, {0.1 + 0.1 * static_cast<double>(rng() % 9), rng(), U'a'},
        cover.size());
    try {
      const ExtractResult r = ExtractRobust(tampered, crc);
      if (!r.HasWarning(ExtractWarning::kValidityFailed)) {
        ASSERT_EQ(r.message, message);
      }
    } catch (const Error&) {
    }
  }
}

}  // namespace
}  // namespace innamark
