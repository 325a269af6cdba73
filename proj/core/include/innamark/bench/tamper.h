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

#ifndef INNAMARK_BENCH_TAMPER_H_
#define INNAMARK_BENCH_TAMPER_H_

#include <cstddef>
#include <cstdint>

#include "innamark/utf8.h"

namespace innamark::bench {

// SplitMix64. Used instead of <random> distributions so that streams are
// identical on every standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [0, 1).
  double Unit();

 private:
  std::uint64_t state_;
};

// Seed for document `index` of a run started from `master`.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

struct TamperSpec {
  // Share of the original cover length to overwrite, within [0.1, 0.9].
  double fraction = 0.1;
  std::uint64_t seed = 0;
  CodePoint fill = U'a';
};

// Overwrites a block of round(fraction * reference_length) code points,
// starting at a seeded uniform position, with `fill`. The block is clamped
// to the text. Same spec, same output. Throws Error(kInvalidArgument) for a
// fraction outside [0.1, 0.9].
Text TamperReplace(TextView text, const TamperSpec& spec,
                   std::size_t reference_length);

}  // namespace innamark::bench

#endif  // INNAMARK_BENCH_TAMPER_H_
