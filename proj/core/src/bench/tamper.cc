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

#include "innamark/bench/tamper.h"

#include <algorithm>
#include <cmath>

#include "innamark/error.h"

namespace innamark::bench {

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Below(std::uint64_t bound) {
  // High word of Next() * bound.
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<Wide>(Next()) * bound) >> 64);
}

double SplitMix64::Unit() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 mix(master ^ (0xD1B54A32D192ED03ull * (index + 1)));
  return mix.Next();
}

Text TamperReplace(TextView text, const TamperSpec& spec,
                   std::size_t reference_length) {
  constexpr double kEps = 1e-9;
  if (!(spec.fraction >= 0.1 - kEps && spec.fraction <= 0.9 + kEps)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tamper fraction must lie in [0.1, 0.9]");
  }
  const auto block = std::min<std::size_t>(
      text.size(), static_cast<std::size_t>(std::llround(
                       spec.fraction * static_cast<double>(reference_length))));
  SplitMix64 rng(spec.seed);
  const std::size_t start =
      static_cast<std::size_t>(rng.Below(text.size() - block + 1));
  Text out(text);
  std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(start), block, spec.fill);
  return out;
}

}  // namespace innamark::bench
