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

#include "innamark/bench/similarity.h"

#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.h"

namespace innamark::bench {
namespace {

TEST(JaroTest, TextbookPairs) {
  EXPECT_NEAR(Jaro(U"MARTHA", U"MARHTA"), 17.0 / 18.0, 1e-12);
  EXPECT_NEAR(JaroWinkler(U"MARTHA", U"MARHTA"), 0.961111, 1e-6);
  EXPECT_NEAR(Jaro(U"DIXON", U"DICKSONX"), 0.766667, 1e-6);
  EXPECT_NEAR(JaroWinkler(U"DIXON", U"DICKSONX"), 0.813333, 1e-6);
}

TEST(JaroTest, EdgeCases) {
  EXPECT_EQ(Jaro(U"", U""), 1.0);
  EXPECT_EQ(Jaro(U"abc", U""), 0.0);
  EXPECT_EQ(Jaro(U"abc", U"xyz"), 0.0);
  EXPECT_EQ(JaroWinkler(U"same", U"same"), 1.0);
}

TEST(JaroTest, MatchesQuadraticOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t alphabet = 2 + rng() % 5;
    auto make = [&] {
      std::u32string s(rng() % 40, U'a');
      for (auto& c : s) c = U'a' + static_cast<char32_t>(rng() % alphabet);
      return s;
    };
    const std::u32string a = make();
    const std::u32string b = make();
    ASSERT_NEAR(Jaro(a, b), testing::NaiveJaro(a, b), 1e-12)
        << trial;
  }
}

TEST(JaroTest, SymmetricAndBounded) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    std::u32string a(rng() % 30, U'a'), b(rng() % 30, U'a');
    for (auto& c : a) c = U'a' + static_cast<char32_t>(rng() % 4);
    for (auto& c : b) c = U'a' + static_cast<char32_t>(rng() % 4);
    const double j = Jaro(a, b);
    const double jw = JaroWinkler(a, b);
    ASSERT_NEAR(j, Jaro(b, a), 1e-12);
    ASSERT_GE(j, 0.0);
    ASSERT_LE(jw, 1.0);
    ASSERT_GE(jw, j);
  }
}

}  // namespace
}  // namespace innamark::bench
