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

#ifndef INNAMARK_BENCH_SIMILARITY_H_
#define INNAMARK_BENCH_SIMILARITY_H_

#include "innamark/utf8.h"

namespace innamark::bench {

// Jaro similarity over code points. Characters match when equal and no
// further apart than floor(max(|a|, |b|) / 2) - 1; the transposition count
// is half the number of matched characters that appear in a different
// order.
//
// Runs in O(|a| + |b|): for each character of `a`, the candidate positions
// of that character in `b` are consumed through a per-character cursor,
// which yields the same greedy leftmost assignment as the quadratic scan.
double Jaro(TextView a, TextView b);

// Jaro + l * 0.1 * (1 - Jaro), l the common prefix length capped at 4.
double JaroWinkler(TextView a, TextView b);

}  // namespace innamark::bench

#endif  // INNAMARK_BENCH_SIMILARITY_H_
