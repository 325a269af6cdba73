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

#include "innamark/bench/metrics.h"

namespace innamark::bench {

std::int64_t CharCountDelta(TextView cover, TextView marked) {
  return static_cast<std::int64_t>(marked.size()) -
         static_cast<std::int64_t>(cover.size());
}

std::int64_t Utf8SizeDelta(TextView cover, TextView marked) {
  return static_cast<std::int64_t>(Utf8Length(marked)) -
         static_cast<std::int64_t>(Utf8Length(cover));
}

double CapacityRatio(std::span<const Document> corpus, const Scheme& scheme) {
  if (!scheme.bounded()) return 1.0;
  if (corpus.empty()) return 0.0;
  double sum = 0.0;
  for (const Document& doc : corpus) {
    if (doc.text.empty()) continue;
    sum += 8.0 * static_cast<double>(scheme.MaxPayloadBytes(doc.text)) /
           static_cast<double>(doc.text.size());
  }
  return sum / static_cast<double>(corpus.size());
}

}  // namespace innamark::bench
