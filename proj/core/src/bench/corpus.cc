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

#include "innamark/bench/corpus.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "innamark/bench/tamper.h"
#include "innamark/error.h"

namespace innamark::bench {
namespace {

constexpr std::array<std::string_view, 160> kWords = {
    "the",       "of",        "and",      "to",        "in",
    "a",         "is",        "was",      "for",       "on",
    "as",        "with",      "by",       "at",        "from",
    "that",      "which",     "it",       "an",        "were",
    "are",       "this",      "be",       "has",       "had",
    "its",       "after",     "first",    "new",       "during",
    "city",      "river",     "village",  "station",   "church",
    "school",    "county",    "district", "railway",   "island",
    "population", "century",  "history",  "region",    "north",
    "south",     "east",      "west",     "area",      "census",
    "government", "family",   "species",  "album",     "film",
    "season",    "team",      "league",   "player",    "club",
    "war",       "army",      "battle",   "king",      "queen",
    "university", "college",  "museum",   "library",   "building",
    "bridge",    "road",      "highway",  "mountain",  "valley",
    "lake",      "forest",    "garden",   "market",    "company",
    "industry",  "election",  "party",    "member",    "council",
    "village",   "parish",    "municipality", "province", "state",
    "country",   "world",     "national", "local",     "public",
    "early",     "late",      "modern",   "ancient",   "small",
    "large",     "several",   "many",     "most",      "other",
    "known",     "named",     "built",    "founded",   "located",
    "released",  "published", "written",  "recorded",  "played",
    "served",    "became",    "remained", "moved",     "returned",
    "began",     "ended",     "won",      "lost",      "joined",
    "between",   "under",     "over",     "into",      "through",
    "about",     "against",   "along",    "near",      "within",
    "however",   "also",      "later",    "only",      "still",
    "year",      "years",     "time",     "part",      "number",
    "work",      "music",     "song",     "book",      "series",
    "system",    "water",     "land",     "house",     "court",
    "street",    "port",      "trade",    "art",       "science",
};

constexpr std::string_view kLorem =
    "Lorem ipsum dolor sit amet, consetetur sadipscing elitr, sed diam nonumy "
    "eirmod tempor invidunt ut labore et dolore magna aliquyam erat, sed diam "
    "voluptua. At vero eos et accusam et justo duo dolores et ea rebum. Stet "
    "clita kasd gubergren, no sea takimata sanctus est Lorem ipsum dolor sit "
    "amet.";

std::string Sentence(SplitMix64& rng) {
  const std::size_t words = 5 + rng.Below(20);
  std::string s;
  for (std::size_t w = 0; w < words; ++w) {
    // Squaring the unit draw skews towards the common words up front.
    const double u = rng.Unit();
    const auto index = static_cast<std::size_t>(u * u * kWords.size());
    std::string word(kWords[std::min(index, kWords.size() - 1)]);
    if (w == 0) word[0] = static_cast<char>(word[0] - 'a' + 'A');
    if (w > 0) s += ' ';
    s += word;
    if (w + 1 < words && rng.Below(9) == 0) s += ',';
    if (rng.Below(25) == 0) s += " " + std::to_string(1800 + rng.Below(225));
  }
  s += '.';
  return s;
}

}  // namespace

TextView LoremIpsum() {
  static const Text text = DecodeUtf8(kLorem);
  return text;
}

std::vector<Document> GenerateCorpus(std::size_t count, std::uint64_t seed) {
  std::vector<Document> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 rng(DeriveSeed(seed, i));
    const bool long_doc = rng.Below(4) == 0;
    const std::size_t target =
        long_doc ? 12000 + rng.Below(6001) : 1200 + rng.Below(3801);
    std::string body;
    while (body.size() < target) {
      const std::size_t sentences = 3 + rng.Below(6);
      std::string paragraph;
      for (std::size_t k = 0; k < sentences; ++k) {
        if (k > 0) paragraph += ' ';
        paragraph += Sentence(rng);
      }
      if (!body.empty()) body += "\n\n";
      body += paragraph;
    }
    char name[32];
    std::snprintf(name, sizeof(name), "doc-%04zu", i);
    corpus.push_back(Document{name, DecodeUtf8(body)});
  }
  return corpus;
}

std::vector<Document> LoadCorpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Document> corpus;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    corpus.push_back(Document{path.filename().string(), DecodeUtf8(buf.str())});
  }
  return corpus;
}

double MeanLength(std::span<const Document> corpus) {
  if (corpus.empty()) return 0.0;
  double total = 0.0;
  for (const Document& d : corpus) total += static_cast<double>(d.text.size());
  return total / static_cast<double>(corpus.size());
}

}  // namespace innamark::bench
