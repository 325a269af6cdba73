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

#include "innamark/tag.h"

#include <algorithm>
#include <cstdio>

namespace innamark {
namespace {

void PutU32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t GetU32(std::span<const std::uint8_t> in) {
  return (std::uint32_t{in[0]} << 24) | (std::uint32_t{in[1]} << 16) |
         (std::uint32_t{in[2]} << 8) | std::uint32_t{in[3]};
}

const std::string& RequirePassphrase(const Options& options) {
  if (!options.passphrase || options.passphrase->empty()) {
    throw Error(ErrorCode::kMissingKey,
                "payload is encrypted but no passphrase was supplied");
  }
  return *options.passphrase;
}

}  // namespace

std::uint8_t EncodeTag(const TagFlags& flags) {
  std::uint8_t tag = 0;
  if (flags.encryption) tag |= kTagEncryption;
  if (flags.compression) tag |= kTagCompression;
  if (flags.hashing) tag |= kTagHashing;
  if (flags.crc32) tag |= kTagCrc32;
  if (flags.size_prefix) tag |= kTagSizePrefix;
  return tag;
}

TagFlags ParseTag(std::uint8_t tag) {
  if (tag & kTagReservedMask) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "reserved tag bits set: 0x%02X",
                  static_cast<unsigned>(tag & kTagReservedMask));
    throw Error(ErrorCode::kUnknownTag, buf);
  }
  return TagFlags{
      .encryption = (tag & kTagEncryption) != 0,
      .compression = (tag & kTagCompression) != 0,
      .hashing = (tag & kTagHashing) != 0,
      .crc32 = (tag & kTagCrc32) != 0,
      .size_prefix = (tag & kTagSizePrefix) != 0,
  };
}

std::size_t PrefixLength(const TagFlags& flags) {
  return (flags.size_prefix ? kSizePrefixBytes : 0) +
         (flags.hashing ? kDigestSize : 0) +
         (flags.crc32 ? kCrcPrefixBytes : 0);
}

Bytes TaggedPayload::Serialize() const {
  Bytes out;
  out.reserve(1 + 16 + body.size());
  out.push_back(tag);
  if (size) PutU32(out, *size);
  if (digest) out.insert(out.end(), digest->begin(), digest->end());
  if (crc) PutU32(out, *crc);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

TaggedPayload ApplyTag(std::span<const std::uint8_t> message,
                       const Options& options) {
  const TagFlags& flags = options.flags;
  const TransformSuite& suite = options.suite();
  TaggedPayload payload;
  payload.tag = EncodeTag(flags);
  payload.body.assign(message.begin(), message.end());
  if (flags.compression) payload.body = suite.compressor->Compress(payload.body);
  if (flags.encryption) {
    payload.body =
        suite.cipher->Encrypt(payload.body, RequirePassphrase(options));
  }
  if (flags.size_prefix) {
    payload.size = static_cast<std::uint32_t>(payload.body.size());
  }
  if (flags.hashing) payload.digest = suite.hasher->Hash(payload.body);
  if (flags.crc32) payload.crc = Crc32(payload.body);
  return payload;
}

Bytes AnalyzeTag(std::span<const std::uint8_t> serialized,
                 const Options& options) {
  if (serialized.empty()) {
    throw Error(ErrorCode::kTruncatedPrefix, "payload has no tag byte");
  }
  const TagFlags flags = ParseTag(serialized[0]);
  const std::size_t header = 1 + PrefixLength(flags);
  if (serialized.size() < header) {
    throw Error(ErrorCode::kTruncatedPrefix,
                "payload shorter than its tag prefixes");
  }
  std::span<const std::uint8_t> cursor = serialized.subspan(1);
  const auto body = serialized.subspan(header);

  if (flags.size_prefix) {
    const std::uint32_t size = GetU32(cursor);
    cursor = cursor.subspan(kSizePrefixBytes);
    if (size != body.size()) {
      throw Error(ErrorCode::kSizeMismatch,
                  "size prefix says " + std::to_string(size) +
                      " bytes, body has " + std::to_string(body.size()));
    }
  }
  const TransformSuite& suite = options.suite();
  if (flags.hashing) {
    const auto expected = cursor.first(kDigestSize);
    cursor = cursor.subspan(kDigestSize);
    const Digest actual = suite.hasher->Hash(body);
    if (!std::equal(actual.begin(), actual.end(), expected.begin())) {
      throw Error(ErrorCode::kHashMismatch, "hash prefix does not match body");
    }
  }
  if (flags.crc32) {
    const std::uint32_t expected = GetU32(cursor);
    cursor = cursor.subspan(kCrcPrefixBytes);
    if (Crc32(body) != expected) {
      throw Error(ErrorCode::kCrcMismatch, "CRC-32 prefix does not match body");
    }
  }

  Bytes message(body.begin(), body.end());
  if (flags.encryption) {
    message = suite.cipher->Decrypt(message, RequirePassphrase(options));
  }
  if (flags.compression) message = suite.compressor->Decompress(message);
  return message;
}

TagAnalysis TryAnalyzeTag(std::span<const std::uint8_t> serialized,
                          const Options& options) {
  TagAnalysis result;
  try {
    if (!serialized.empty()) result.flags = ParseTag(serialized[0]);
    result.message = AnalyzeTag(serialized, options);
  } catch (const Error& e) {
    result.error = e.code();
  }
  return result;
}

}  // namespace innamark
