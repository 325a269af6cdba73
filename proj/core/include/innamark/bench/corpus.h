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

#ifndef INNAMARK_BENCH_CORPUS_H_
#define INNAMARK_BENCH_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "innamark/utf8.h"

namespace innamark::bench {

struct Document {
  std::string name;
  Text text;
};

// The "Lorem ipsum" filler paragraph used in examples and tests.
TextView LoremIpsum();

// Deterministic English-like prose. Three quarters of the documents are
// 1,200 to 5,000 code points long and the rest 12,000 to 18,000, so both
// short and long messages find covers.
std::vector<Document> GenerateCorpus(std::size_t count, std::uint64_t seed);

// Every *.txt file directly inside `dir`, sorted by file name. Throws
// Error(kInvalidUtf8) for files that are not valid UTF-8.
std::vector<Document> LoadCorpus(const std::filesystem::path& dir);

double MeanLength(std::span<const Document> corpus);

}  // namespace innamark::bench

#endif  // INNAMARK_BENCH_CORPUS_H_
