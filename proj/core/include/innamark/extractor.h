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

#ifndef INNAMARK_EXTRACTOR_H_
#define INNAMARK_EXTRACTOR_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "innamark/codec.h"
#include "innamark/options.h"
#include "innamark/utf8.h"

namespace innamark {

enum class ExtractMode { kLiteral, kRobust };

enum class ExtractWarning {
  // The digit run ended in a partial byte; the partial byte was dropped.
  kTruncatedTail,
  // Digits ahead of the first separator were ignored.
  kGarbagePrefixSkipped,
  // No copy verified on its own; the result is a per-digit majority vote.
  kMajorityVote,
  // Nothing verified; the result is a best-effort decode.
  kValidityFailed,
};

std::string_view ExtractModeName(ExtractMode mode);
std::string_view ExtractWarningName(ExtractWarning warning);

struct ExtractResult {
  Bytes message;
  ExtractMode mode = ExtractMode::kRobust;
  std::size_t segments_found = 0;
  std::size_t segments_valid = 0;
  std::vector<ExtractWarning> warnings;
  // Flags of the tag the result was decoded from, when it parsed.
  std::optional<TagFlags> flags;

  bool HasWarning(ExtractWarning w) const;
};

// One separator-delimited run of digit characters, i.e. one embedded copy.
struct Segment {
  DigitString digits;
  // False only for a run that precedes the first separator.
  bool anchored = true;
  // False for the final run when no separator follows it.
  bool terminated = true;
};

// Splits the marked characters of `text` on separators. Every maximal run of
// digits is returned in text order; empty runs between adjacent separators
// are dropped.
std::vector<Segment> Segments(TextView text, const WhitespaceAlphabet& alphabet);

// Scan exactly as the reference extraction does: collect digit characters
// (including any that precede the first separator) until a separator shows
// up after at least one digit, then decode and analyze the tag.
// Throws Error(kNoMarks) when no alphabet character is present and
// propagates every tag analysis error.
ExtractResult ExtractLiteral(TextView text, const Options& options = {});

// Decodes every anchored copy independently. A copy is valid when its
// digit count is a whole number of bytes and its tag, prefixes and
// transforms all check out. Among valid copies the most frequent decoded
// payload wins, ties going to the earliest. If none is valid and at least
// three copies share a length, a per-digit vote (ties to the lowest digit)
// is tried. Failing that, the longest copy is decoded best-effort and
// flagged kValidityFailed.
// Throws Error(kNoMarks) without alphabet characters and
// Error(kUnrecoverable) when no copy yields a single byte.
ExtractResult ExtractRobust(TextView text, const Options& options = {});

ExtractResult Extract(TextView text, ExtractMode mode,
                      const Options& options = {});

}  // namespace innamark

#endif  // INNAMARK_EXTRACTOR_H_
