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

#include "innamark/bench/sweep.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <string_view>
#include <thread>

#include "innamark/alphabet.h"
#include "innamark/bench/metrics.h"
#include "innamark/bench/similarity.h"
#include "innamark/bench/tamper.h"

namespace innamark::bench {
namespace {

constexpr std::string_view kLongText =
    "It is a truth universally acknowledged, that a single man in possession "
    "of a good fortune, must be in want of a wife. However little known the "
    "feelings or views of such a man may be on his first entering a "
    "neighbourhood, this truth is so well fixed in the minds of the "
    "surrounding families, that he is considered the rightful property of "
    "some one or other of their daughters. My dear Mr. Bennet, said his lady "
    "to him one day, have you heard that Netherfield Park is let at last? ";

constexpr std::size_t kLongLength = 455;

struct Cell {
  bool embedded = false;
  double jaro = 0.0;
  double jaro_winkler = 0.0;
  std::int64_t char_delta = 0;
  std::int64_t size_delta = 0;
  std::vector<std::uint8_t> success;
};

// cells[scheme][class] for one document.
using DocResult = std::vector<std::array<Cell, 2>>;

DocResult EvaluateDocument(const Document& doc, std::size_t index,
                           std::span<const Scheme* const> schemes,
                           const BenchmarkConfig& config) {
  const std::array<const Bytes*, 2> messages = {&config.short_message,
                                                &config.long_message};
  const std::uint64_t seed = DeriveSeed(config.master_seed, index);
  DocResult result(schemes.size());
  for (std::size_t s = 0; s < schemes.size(); ++s) {
    for (std::size_t m = 0; m < 2; ++m) {
      Cell& cell = result[s][m];
      const auto marked = schemes[s]->Embed(doc.text, *messages[m]);
      if (!marked) continue;
      cell.embedded = true;
      cell.jaro = Jaro(doc.text, *marked);
      cell.jaro_winkler = JaroWinkler(doc.text, *marked);
      cell.char_delta = CharCountDelta(doc.text, *marked);
      cell.size_delta = Utf8SizeDelta(doc.text, *marked);
      for (double fraction : config.fractions) {
        const Text tampered = TamperReplace(
            *marked, TamperSpec{fraction, seed, config.fill}, doc.text.size());
        const auto recovered = schemes[s]->Extract(tampered);
        cell.success.push_back(recovered && *recovered == *messages[m]);
      }
    }
  }
  return result;
}

std::vector<DocResult> EvaluateAll(std::span<const Document> corpus,
                                   std::span<const Scheme* const> schemes,
                                   const BenchmarkConfig& config) {
  std::vector<DocResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      results[i] = EvaluateDocument(corpus[i], i, schemes, config);
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

Bytes ShortMessage() { return Bytes{'J', 'o', 'h', 'n'}; }

Bytes LongMessage() {
  Bytes out;
  out.reserve(kLongLength);
  while (out.size() < kLongLength) {
    for (char c : kLongText) {
      if (out.size() == kLongLength) break;
      out.push_back(static_cast<std::uint8_t>(c));
    }
  }
  return out;
}

std::vector<double> DefaultFractions() {
  std::vector<double> f;
  for (int k = 1; k <= 9; ++k) f.push_back(k / 10.0);
  return f;
}

BenchmarkReport RunBenchmark(std::span<const Document> corpus,
                             std::span<const Scheme* const> schemes,
                             const BenchmarkConfig& config) {
  BenchmarkReport report;
  report.seed = config.master_seed;
  report.corpus = config.corpus_label;
  report.document_count = corpus.size();
  report.mean_length = MeanLength(corpus);
  report.strategies = config.strategies;
  report.alphabet = WhitespaceAlphabet::Default().ToStrings();

  const std::vector<DocResult> results = EvaluateAll(corpus, schemes, config);
  constexpr std::array<const char*, 2> kClasses = {"short", "long"};

  // Documents every scheme embedded into, per class.
  std::array<std::vector<std::size_t>, 2> common;
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      const bool all = std::all_of(results[d].begin(), results[d].end(),
                                   [&](const auto& c) { return c[m].embedded; });
      if (all) common[m].push_back(d);
    }
  }

  for (std::size_t s = 0; s < schemes.size(); ++s) {
    const std::string name(schemes[s]->name());
    report.rows.push_back(
        {name, "any", "capacity_ratio", std::nullopt, CapacityRatio(corpus, *schemes[s])});
    for (std::size_t m = 0; m < 2; ++m) {
      // Each scheme is scored on the documents it could embed into.
      std::vector<std::size_t> docs;
      for (std::size_t d = 0; d < results.size(); ++d) {
        if (results[d][s][m].embedded) docs.push_back(d);
      }
      report.skipped.push_back({name, kClasses[m], results.size() - docs.size()});

      const double n = static_cast<double>(docs.size());
      auto mean = [&](auto field) {
        if (docs.empty()) return 0.0;
        double sum = 0.0;
        for (std::size_t d : docs) sum += field(results[d][s][m]);
        return sum / n;
      };
      auto add = [&](const char* metric, double value,
                     std::optional<double> fraction = std::nullopt) {
        report.rows.push_back({name, kClasses[m], metric, fraction, value});
      };
      add("evaluated_documents", n);
      add("jaro_mean", mean([](const Cell& c) { return c.jaro; }));
      add("jaro_winkler_mean", mean([](const Cell& c) { return c.jaro_winkler; }));
      add("char_count_delta_mean",
          mean([](const Cell& c) { return static_cast<double>(c.char_delta); }));
      double max_abs = 0.0;
      for (std::size_t d : docs) {
        max_abs = std::max(max_abs, std::fabs(static_cast<double>(results[d][s][m].char_delta)));
      }
      add("char_count_delta_max_abs", max_abs);
      add("utf8_size_delta_mean",
          mean([](const Cell& c) { return static_cast<double>(c.size_delta); }));
      for (std::size_t f = 0; f < config.fractions.size(); ++f) {
        add("success_rate",
            mean([f](const Cell& c) { return static_cast<double>(c.success[f]); }),
            config.fractions[f]);
      }
    }
  }
  return report;
}

}  // namespace innamark::bench
