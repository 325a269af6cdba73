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

#ifndef INNAMARK_BENCH_SWEEP_H_
#define INNAMARK_BENCH_SWEEP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "innamark/bench/corpus.h"
#include "innamark/bench/report.h"
#include "innamark/bench/schemes.h"
#include "innamark/error.h"

namespace innamark::bench {

// "John": the four-byte message of the short runs.
Bytes ShortMessage();
// 455 bytes of ASCII prose for the long runs.
Bytes LongMessage();

// 0.1, 0.2, ..., 0.9
std::vector<double> DefaultFractions();

struct BenchmarkConfig {
  std::uint64_t master_seed = 0x5EED5EED;
  std::vector<double> fractions = DefaultFractions();
  CodePoint fill = U'a';
  Bytes short_message = ShortMessage();
  Bytes long_message = LongMessage();
  // Worker threads over documents. Results do not depend on it.
  unsigned threads = 1;
  // Recorded in the report metadata.
  std::string corpus_label = "generated";
  std::string strategies;
};

// For every scheme and message class: embeds into each document, measures
// similarity and size deltas, then for every fraction overwrites a block
// (seed DeriveSeed(master_seed, document index), shared by all schemes and
// fractions) and records whether the exact message comes back.
//
// Per class, metrics cover only the documents every scheme could embed
// into, so schemes are compared on identical covers; the rest are counted
// in `skipped`. Capacity rows use the whole corpus.
//
// Rows, per scheme in the given order: capacity_ratio (class "any"), then
// for "short" and "long": evaluated_documents, jaro_mean,
// jaro_winkler_mean, char_count_delta_mean, char_count_delta_max_abs,
// utf8_size_delta_mean, success_rate at each fraction.
BenchmarkReport RunBenchmark(std::span<const Document> corpus,
                             std::span<const Scheme* const> schemes,
                             const BenchmarkConfig& config);

}  // namespace innamark::bench

#endif  // INNAMARK_BENCH_SWEEP_H_
