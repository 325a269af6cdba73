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

#ifndef INNAMARK_BENCH_METRICS_H_
#define INNAMARK_BENCH_METRICS_H_

#include <cstdint>
#include <span>

#include "innamark/bench/corpus.h"
#include "innamark/bench/schemes.h"
#include "innamark/utf8.h"

namespace innamark::bench {

// Code points of `marked` minus code points of `cover`.
std::int64_t CharCountDelta(TextView cover, TextView marked);

// UTF-8 byte length of `marked` minus that of `cover`.
std::int64_t Utf8SizeDelta(TextView cover, TextView marked);

// Mean over documents of max embeddable bits per code point. Unbounded
// schemes score 1.0 by convention; empty documents score 0.
double CapacityRatio(std::span<const Document> corpus, const Scheme& scheme);

}  // namespace innamark::bench

#endif  // INNAMARK_BENCH_METRICS_H_
