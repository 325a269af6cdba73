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

#ifndef INNAMARK_EMBEDDER_H_
#define INNAMARK_EMBEDDER_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "innamark/options.h"
#include "innamark/utf8.h"

namespace innamark {

struct WatermarkResult {
  Text text;
  // Complete separator + payload copies.
  std::size_t copies_embedded = 0;
  // Digits written after the last complete copy's trailing separator.
  std::size_t partial_tail_digits = 0;
};

// Occurrences of U+0020 only; tabs, newlines and other spaces don't count.
std::size_t CountSpaces(TextView cover);

// Spaces one copy of a tagged payload of `serialized_bytes` occupies:
// the separator plus DigitsPerByte() digits per byte.
std::size_t SpacesPerCopy(std::size_t serialized_bytes,
                          const WhitespaceAlphabet& alphabet =
                              WhitespaceAlphabet::Default());

// Largest body length (bytes after compression/encryption) that fits one
// copy in `cover` with the prefixes `flags` implies; 0 if nothing fits.
std::size_t CapacityBytes(TextView cover, const TagFlags& flags,
                          const WhitespaceAlphabet& alphabet =
                              WhitespaceAlphabet::Default());

// Replaces every U+0020 of `cover`, in order, with the endless stream
// separator, digits(tagged payload), separator, digits(...), ...
// Every other code point stays in place, so the output has exactly as many
// code points as the cover and contains no U+0020.
//
// Throws CapacityError(kNoSpaces) for a cover without spaces and
// CapacityError(kInsufficientCapacity) when one copy does not fit.
WatermarkResult Embed(TextView cover, std::span<const std::uint8_t> message,
                      const Options& options = {});

}  // namespace innamark

#endif  // INNAMARK_EMBEDDER_H_
