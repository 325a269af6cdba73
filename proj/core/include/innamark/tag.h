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

#ifndef INNAMARK_TAG_H_
#define INNAMARK_TAG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "innamark/error.h"
#include "innamark/options.h"
#include "innamark/transforms.h"

namespace innamark {

// Tag bits, counted from the most significant bit:
//   1 encryption  2 compression  3 hashing  4 crc32  5 size prefix
//   6-8 reserved, must be zero
inline constexpr std::uint8_t kTagEncryption = 0x80;
inline constexpr std::uint8_t kTagCompression = 0x40;
inline constexpr std::uint8_t kTagHashing = 0x20;
inline constexpr std::uint8_t kTagCrc32 = 0x10;
inline constexpr std::uint8_t kTagSizePrefix = 0x08;
inline constexpr std::uint8_t kTagReservedMask = 0x07;

inline constexpr std::size_t kSizePrefixBytes = 4;
inline constexpr std::size_t kCrcPrefixBytes = 4;

std::uint8_t EncodeTag(const TagFlags& flags);

// Throws Error(kUnknownTag) if any reserved bit is set.
TagFlags ParseTag(std::uint8_t tag);

// Bytes between the tag and the body for these flags.
std::size_t PrefixLength(const TagFlags& flags);

// Wire layout, bit-exact:
//   tag || size (u32 BE) || digest (8) || crc32 (u32 BE) || body
// where each prefix is present only when its flag is set and all of them
// describe the final (compressed, then encrypted) body.
struct TaggedPayload {
  std::uint8_t tag = 0;
  std::optional<std::uint32_t> size;
  std::optional<Digest> digest;
  std::optional<std::uint32_t> crc;
  Bytes body;

  Bytes Serialize() const;
};

// Compresses then encrypts `message` as the flags ask, then computes the
// enabled prefixes over the result. Throws Error(kMissingKey) when
// encryption is requested without a passphrase.
TaggedPayload ApplyTag(std::span<const std::uint8_t> message,
                       const Options& options);

// Verifies and strips the prefixes of a serialized payload, then reverses
// the transforms. Throws Error with the first check that fails.
Bytes AnalyzeTag(std::span<const std::uint8_t> serialized,
                 const Options& options);

// Non-throwing AnalyzeTag() for callers that treat failure as a signal.
struct TagAnalysis {
  std::optional<Bytes> message;
  std::optional<ErrorCode> error;
  std::optional<TagFlags> flags;

  bool ok() const { return message.has_value(); }
};

TagAnalysis TryAnalyzeTag(std::span<const std::uint8_t> serialized,
                          const Options& options);

}  // namespace innamark

#endif  // INNAMARK_TAG_H_
