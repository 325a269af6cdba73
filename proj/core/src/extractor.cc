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

#include <algorithm>
#include <array>
#include <map>

#include "innamark/error.h"
#include "innamark/tag.h"

namespace innamark {
namespace {

bool HasMarks(TextView text, const WhitespaceAlphabet& alphabet) {
  return std::any_of(text.begin(), text.end(),
                     [&](CodePoint c) { return alphabet.Contains(c); });
}

// Distinct digit runs among the candidate copies, in order of first
// appearance.
struct Group {
  const DigitString* digits;
  std::size_t count;
  std::size_t first;
  TagAnalysis analysis;
};

Bytes BestEffort(const Bytes& decoded) {
  try {
    const TagFlags flags = ParseTag(decoded.at(0));
    const std::size_t header = 1 + PrefixLength(flags);
    if (decoded.size() >= header) {
      return Bytes(decoded.begin() + static_cast<std::ptrdiff_t>(header),
                   decoded.end());
    }
  } catch (const Error&) {
  }
  return decoded;
}

}  // namespace

std::string_view ExtractModeName(ExtractMode mode) {
  return mode == ExtractMode::kLiteral ? "literal" : "robust";
}

std::string_view ExtractWarningName(ExtractWarning warning) {
  switch (warning) {
    case ExtractWarning::kTruncatedTail:
      return "truncated-tail";
    case ExtractWarning::kGarbagePrefixSkipped:
      return "garbage-prefix-skipped";
    case ExtractWarning::kMajorityVote:
      return "majority-vote";
    case ExtractWarning::kValidityFailed:
      return "validity-failed";
  }
  return "unknown";
}

bool ExtractResult::HasWarning(ExtractWarning w) const {
  return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
}

std::vector<Segment> Segments(TextView text,
                              const WhitespaceAlphabet& alphabet) {
  std::vector<Segment> out;
  Segment current;
  current.anchored = false;
  for (CodePoint c : text) {
    if (c == alphabet.separator()) {
      if (!current.digits.empty()) out.push_back(std::move(current));
      current = Segment{};
    } else if (alphabet.IsDigit(c)) {
      current.digits.push_back(c);
    }
  }
  if (!current.digits.empty()) {
    current.terminated = false;
    out.push_back(std::move(current));
  }
  return out;
}

ExtractResult ExtractLiteral(TextView text, const Options& options) {
  const WhitespaceAlphabet& alphabet = options.alphabet;
  DigitString collected;
  bool marked = false;
  for (CodePoint c : text) {
    if (!alphabet.Contains(c)) continue;
    marked = true;
    if (c == alphabet.separator()) {
      if (!collected.empty()) break;
    } else {
      collected.push_back(c);
    }
  }
  if (!marked) throw Error(ErrorCode::kNoMarks, "no whitespace marks found");

  const DecodedDigits decoded = DecodeDigits(collected, alphabet);
  ExtractResult result;
  result.mode = ExtractMode::kLiteral;
  result.message = AnalyzeTag(decoded.bytes, options);
  result.flags = ParseTag(decoded.bytes.front());
  result.segments_found = Segments(text, alphabet).size();
  result.segments_valid = 1;
  if (decoded.truncated_tail) {
    result.warnings.push_back(ExtractWarning::kTruncatedTail);
  }
  return result;
}

ExtractResult ExtractRobust(TextView text, const Options& options) {
  const WhitespaceAlphabet& alphabet = options.alphabet;
  if (!HasMarks(text, alphabet)) {
    throw Error(ErrorCode::kNoMarks, "no whitespace marks found");
  }
  const std::vector<Segment> segments = Segments(text, alphabet);
  const std::size_t per_byte = DigitsPerByte(alphabet);

  ExtractResult result;
  result.mode = ExtractMode::kRobust;
  result.segments_found = segments.size();

  std::vector<const Segment*> copies;
  for (const Segment& s : segments) {
    if (s.anchored) {
      copies.push_back(&s);
    } else {
      result.warnings.push_back(ExtractWarning::kGarbagePrefixSkipped);
    }
  }

  // Identical runs are analyzed once; key derivation can be expensive.
  std::vector<Group> groups;
  std::map<DigitString, std::size_t> index;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    auto [it, inserted] = index.try_emplace(copies[i]->digits, groups.size());
    if (inserted) {
      groups.push_back(Group{&copies[i]->digits, 0, i, {}});
    }
    ++groups[it->second].count;
  }
  const Group* best = nullptr;
  for (Group& g : groups) {
    if (g.digits->size() % per_byte != 0) continue;
    g.analysis = TryAnalyzeTag(DecodeDigits(*g.digits, alphabet).bytes, options);
    if (!g.analysis.ok()) continue;
    result.segments_valid += g.count;
    if (best == nullptr || g.count > best->count) best = &g;
  }

  if (best != nullptr) {
    const Bytes serialized = DecodeDigits(*best->digits, alphabet).bytes;
    // Re-verify before handing the payload out.
    const TagAnalysis check = TryAnalyzeTag(serialized, options);
    if (!check.ok() || *check.message != *best->analysis.message) {
      throw Error(ErrorCode::kUnrecoverable,
                  "selected copy failed re-verification");
    }
    result.message = *best->analysis.message;
    result.flags = best->analysis.flags;
    return result;
  }

  for (const Group& g : groups) {
    if (g.analysis.error == ErrorCode::kMissingKey) {
      throw Error(ErrorCode::kMissingKey, "marked text is encrypted; no passphrase given");
    }
  }

  // Vote across the largest set of equal-length copies, if there are three.
  std::map<std::size_t, std::vector<const DigitString*>> by_length;
  for (const Segment* s : copies) {
    if (s->digits.size() % per_byte == 0) {
      by_length[s->digits.size()].push_back(&s->digits);
    }
  }
  const std::vector<const DigitString*>* voters = nullptr;
  for (const auto& [length, runs] : by_length) {
    if (runs.size() >= 3 && (voters == nullptr || runs.size() > voters->size())) {
      voters = &runs;
    }
  }
  if (voters != nullptr) {
    const std::size_t length = voters->front()->size();
    DigitString voted(length, U'\0');
    for (std::size_t p = 0; p < length; ++p) {
      std::array<std::size_t, WhitespaceAlphabet::kDigitCount> tally{};
      for (const DigitString* run : *voters) {
        ++tally[static_cast<std::size_t>(*alphabet.DigitOf((*run)[p]))];
      }
      // max_element returns the first maximum: ties go to the lowest digit.
      const auto winner = std::max_element(tally.begin(), tally.end());
      voted[p] = alphabet.CharOf(static_cast<int>(winner - tally.begin()));
    }
    const TagAnalysis analysis =
        TryAnalyzeTag(DecodeDigits(voted, alphabet).bytes, options);
    if (analysis.ok()) {
      result.message = *analysis.message;
      result.flags = analysis.flags;
      result.warnings.push_back(ExtractWarning::kMajorityVote);
      return result;
    }
  }

  // Best effort: the longest copy, or the unanchored run if that is all.
  const DigitString* longest = nullptr;
  for (const Segment* s : copies) {
    if (longest == nullptr || s->digits.size() > longest->size()) {
      longest = &s->digits;
    }
  }
  if (longest == nullptr && !segments.empty()) longest = &segments.front().digits;
  if (longest == nullptr || longest->size() < per_byte) {
    throw Error(ErrorCode::kUnrecoverable, "no copy decodes to any bytes");
  }
  const DecodedDigits decoded = DecodeDigits(*longest, alphabet);
  result.message = BestEffort(decoded.bytes);
  result.warnings.push_back(ExtractWarning::kValidityFailed);
  if (decoded.truncated_tail) {
    result.warnings.push_back(ExtractWarning::kTruncatedTail);
  }
  return result;
}

ExtractResult Extract(TextView text, ExtractMode mode, const Options& options) {
  return mode == ExtractMode::kLiteral ? ExtractLiteral(text, options)
                                       : ExtractRobust(text, options);
}

}  // namespace innamark
