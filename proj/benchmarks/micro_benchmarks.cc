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

#include <benchmark/benchmark.h>

#include <random>

#include "innamark/bench/corpus.h"
#include "innamark/bench/similarity.h"
#include "innamark/codec.h"
#include "innamark/embedder.h"
#include "innamark/extractor.h"
#include "innamark/transforms.h"

namespace innamark {
namespace {

Bytes RandomBytes(std::size_t n) {
  std::mt19937_64 rng(1);
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

const bench::Document& LongDocument() {
  static const auto corpus = bench::GenerateCorpus(8, 3);
  const bench::Document* best = &corpus.front();
  for (const auto& d : corpus) {
    if (d.text.size() > best->text.size()) best = &d;
  }
  return *best;
}

void BM_EncodeBytes(benchmark::State& state) {
  const Bytes data = RandomBytes(static_cast<std::size_t>(state.range(0)));
  const WhitespaceAlphabet alphabet = WhitespaceAlphabet::Default();
  for (auto _ : state) benchmark::DoNotOptimize(EncodeBytes(data, alphabet));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EncodeBytes)->Arg(16)->Arg(4096);

void BM_Crc32(benchmark::State& state) {
  const Bytes data = RandomBytes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Crc32(data));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Crc32)->Arg(64)->Arg(1 << 16);

void BM_Embed(benchmark::State& state) {
  const Text& cover = LongDocument().text;
  const Bytes message = {'J', 'o', 'h', 'n'};
  for (auto _ : state) benchmark::DoNotOptimize(Embed(cover, message));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cover.size()));
}
BENCHMARK(BM_Embed);

void BM_ExtractRobust(benchmark::State& state) {
  Options options;
  options.flags.crc32 = state.range(0) != 0;
  const Text marked = Embed(LongDocument().text, Bytes{'J', 'o', 'h', 'n'}, options).text;
  for (auto _ : state) benchmark::DoNotOptimize(ExtractRobust(marked, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(marked.size()));
}
BENCHMARK(BM_ExtractRobust)->Arg(0)->Arg(1);

void BM_JaroWinkler(benchmark::State& state) {
  const Text& cover = LongDocument().text;
  const Text marked = Embed(cover, Bytes{'J', 'o', 'h', 'n'}).text;
  for (auto _ : state) benchmark::DoNotOptimize(bench::JaroWinkler(cover, marked));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cover.size()));
}
BENCHMARK(BM_JaroWinkler);

}  // namespace
}  // namespace innamark

BENCHMARK_MAIN();
