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

#ifndef INNAMARK_BENCH_REPORT_H_
#define INNAMARK_BENCH_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace innamark::bench {

// One metric value. `message_class` is "short", "long", or "any" for
// message-independent metrics; `fraction` is set only on success_rate rows.
struct ReportRow {
  std::string algorithm;
  std::string message_class;
  std::string metric;
  std::optional<double> fraction;
  double value = 0.0;
};

struct SkipCount {
  std::string algorithm;
  std::string message_class;
  std::size_t documents = 0;
};

struct BenchmarkReport {
  std::vector<ReportRow> rows;
  std::uint64_t seed = 0;
  std::string corpus;
  std::size_t document_count = 0;
  double mean_length = 0.0;
  std::string strategies;
  std::vector<std::string> alphabet;
  std::vector<SkipCount> skipped;

  const ReportRow* Find(const std::string& algorithm,
                        const std::string& message_class,
                        const std::string& metric,
                        std::optional<double> fraction = std::nullopt) const;

  // Like Find() but throws std::out_of_range when the row is missing.
  double Value(const std::string& algorithm, const std::string& message_class,
               const std::string& metric,
               std::optional<double> fraction = std::nullopt) const;

  // Header: algorithm,message_class,metric,fraction,value
  std::string ToCsv() const;
  // {"metadata": {...}, "results": {algorithm: {class: {metric: value,
  //   "success_rate": {"0.1": value, ...}}}}}
  std::string ToJson() const;
};

}  // namespace innamark::bench

#endif  // INNAMARK_BENCH_REPORT_H_
