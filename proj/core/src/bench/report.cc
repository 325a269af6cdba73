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

#include "innamark/bench/report.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace innamark::bench {
namespace {

std::string FormatFraction(double f) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.1f", f);
  return buf;
}

std::string FormatValue(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

bool SameFraction(std::optional<double> a, std::optional<double> b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || std::fabs(*a - *b) < 1e-9;
}

}  // namespace

const ReportRow* BenchmarkReport::Find(const std::string& algorithm,
                                       const std::string& message_class,
                                       const std::string& metric,
                                       std::optional<double> fraction) const {
  for (const ReportRow& row : rows) {
    if (row.algorithm == algorithm && row.message_class == message_class &&
        row.metric == metric && SameFraction(row.fraction, fraction)) {
      return &row;
    }
  }
  return nullptr;
}

double BenchmarkReport::Value(const std::string& algorithm,
                              const std::string& message_class,
                              const std::string& metric,
                              std::optional<double> fraction) const {
  const ReportRow* row = Find(algorithm, message_class, metric, fraction);
  if (row == nullptr) {
    throw std::out_of_range("no report row " + algorithm + "/" +
                            message_class + "/" + metric);
  }
  return row->value;
}

std::string BenchmarkReport::ToCsv() const {
  std::string out = "algorithm,message_class,metric,fraction,value\n";
  for (const ReportRow& row : rows) {
    out += row.algorithm + ',' + row.message_class + ',' + row.metric + ',' +
           (row.fraction ? FormatFraction(*row.fraction) : std::string()) +
           ',' + FormatValue(row.value) + '\n';
  }
  return out;
}

std::string BenchmarkReport::ToJson() const {
  using nlohmann::ordered_json;
  ordered_json meta;
  meta["seed"] = seed;
  meta["corpus"] = corpus;
  meta["document_count"] = document_count;
  meta["mean_length"] = mean_length;
  meta["strategies"] = strategies;
  meta["alphabet"] = alphabet;
  ordered_json skips = ordered_json::array();
  for (const SkipCount& s : skipped) {
    skips.push_back({{"algorithm", s.algorithm},
                     {"message_class", s.message_class},
                     {"documents", s.documents}});
  }
  meta["skipped"] = skips;

  ordered_json results = ordered_json::object();
  for (const ReportRow& row : rows) {
    ordered_json& cell = results[row.algorithm][row.message_class];
    if (row.fraction) {
      cell[row.metric][FormatFraction(*row.fraction)] = row.value;
    } else {
      cell[row.metric] = row.value;
    }
  }
  ordered_json doc;
  doc["metadata"] = meta;
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

}  // namespace innamark::bench
