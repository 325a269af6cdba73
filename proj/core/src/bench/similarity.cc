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

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace innamark::bench {
namespace {

struct Positions {
  std::vector<std::size_t> at;
  std::size_t cursor = 0;
};

}  // namespace

double Jaro(TextView a, TextView b) {
  if (a == b) return 1.0;
  if (a.empty() || b.empty()) return 0.0;

  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

  std::unordered_map<CodePoint, Positions> in_b;
  for (std::size_t j = 0; j < b.size(); ++j) in_b[b[j]].at.push_back(j);

  std::vector<bool> b_matched(b.size(), false);
  std::vector<CodePoint> a_order;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = in_b.find(a[i]);
    if (it == in_b.end()) continue;
    Positions& p = it->second;
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(i + window, b.size() - 1);
    while (p.cursor < p.at.size() && p.at[p.cursor] < lo) ++p.cursor;
    if (p.cursor < p.at.size() && p.at[p.cursor] <= hi) {
      b_matched[p.at[p.cursor]] = true;
      ++p.cursor;
      a_order.push_back(a[i]);
    }
  }
  const std::size_t matches = a_order.size();
  if (matches == 0) return 0.0;

  std::size_t out_of_order = 0;
  std::size_t k = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!b_matched[j]) continue;
    if (b[j] != a_order[k]) ++out_of_order;
    ++k;
  }
  const double m = static_cast<double>(matches);
  const double transpositions = static_cast<double>(out_of_order) / 2.0;
  return (m / static_cast<double>(a.size()) +
          m / static_cast<double>(b.size()) + (m - transpositions) / m) /
         3.0;
}

double JaroWinkler(TextView a, TextView b) {
  const double jaro = Jaro(a, b);
  std::size_t prefix = 0;
  const std::size_t limit = std::min<std::size_t>({4, a.size(), b.size()});
  while (prefix < limit && a[prefix] == b[prefix]) ++prefix;
  return jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
}

}  // namespace innamark::bench
