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

#ifndef INNAMARK_TRANSFORMS_H_
#define INNAMARK_TRANSFORMS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "innamark/error.h"

namespace innamark {

inline constexpr std::size_t kDigestSize = 8;
using Digest = std::array<std::uint8_t, kDigestSize>;

// CRC-32/ISO-HDLC: reflected polynomial 0xEDB88320, init and final XOR
// 0xFFFFFFFF. Check value for "123456789" is 0xCBF43926.
std::uint32_t Crc32(std::span<const std::uint8_t> data);

class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual std::string_view id() const = 0;
  virtual Bytes Compress(std::span<const std::uint8_t> data) const = 0;
  // Throws Error(kDecompressFailure) on a corrupt or oversized stream.
  virtual Bytes Decompress(std::span<const std::uint8_t> data) const = 0;
};

class Cipher {
 public:
  virtual ~Cipher() = default;
  virtual std::string_view id() const = 0;
  // Output is self-contained: everything needed besides the passphrase.
  virtual Bytes Encrypt(std::span<const std::uint8_t> plain,
                        std::string_view passphrase) const = 0;
  // Throws Error(kDecryptFailure) on a wrong passphrase or any tampering.
  virtual Bytes Decrypt(std::span<const std::uint8_t> sealed,
                        std::string_view passphrase) const = 0;
};

class Hasher {
 public:
  virtual ~Hasher() = default;
  virtual std::string_view id() const = 0;
  virtual Digest Hash(std::span<const std::uint8_t> data) const = 0;
};

// zlib stream (RFC 1950) at maximum compression.
class ZlibCompressor final : public Compressor {
 public:
  // Decompression aborts past this many output bytes.
  explicit ZlibCompressor(std::size_t max_output = std::size_t{64} << 20)
      : max_output_(max_output) {}

  std::string_view id() const override { return "zlib-deflate-9"; }
  Bytes Compress(std::span<const std::uint8_t> data) const override;
  Bytes Decompress(std::span<const std::uint8_t> data) const override;

 private:
  std::size_t max_output_;
};

// Argon2id cost parameters used to stretch the passphrase.
struct KdfLimits {
  unsigned long long ops;
  std::size_t mem;

  static KdfLimits Interactive();
  // Lowest cost libsodium accepts. Only for tests and benchmarks.
  static KdfLimits Minimal();
};

using RandomSource = std::function<void(std::span<std::uint8_t>)>;

// Argon2id key derivation + XChaCha20-Poly1305. Sealed layout:
// salt (16) || nonce (24) || ciphertext || tag (16).
class PassphraseCipher final : public Cipher {
 public:
  static constexpr std::size_t kSaltSize = 16;
  static constexpr std::size_t kNonceSize = 24;
  static constexpr std::size_t kMacSize = 16;
  static constexpr std::size_t kOverhead = kSaltSize + kNonceSize + kMacSize;

  // An empty random source means the OS generator.
  explicit PassphraseCipher(KdfLimits limits = KdfLimits::Interactive(),
                            RandomSource random = {});

  std::string_view id() const override { return id_; }
  Bytes Encrypt(std::span<const std::uint8_t> plain,
                std::string_view passphrase) const override;
  Bytes Decrypt(std::span<const std::uint8_t> sealed,
                std::string_view passphrase) const override;

 private:
  std::array<std::uint8_t, 32> DeriveKey(
      std::string_view passphrase, std::span<const std::uint8_t> salt) const;

  KdfLimits limits_;
  RandomSource random_;
  std::string id_;
};

// First 8 bytes of SHA-256.
class Sha256Hasher final : public Hasher {
 public:
  std::string_view id() const override { return "sha256-trunc64"; }
  Digest Hash(std::span<const std::uint8_t> data) const override;
};

struct TransformSuite {
  std::shared_ptr<const Compressor> compressor;
  std::shared_ptr<const Cipher> cipher;
  std::shared_ptr<const Hasher> hasher;

  // zlib, Argon2id(interactive)+XChaCha20-Poly1305, SHA-256/64.
  static std::shared_ptr<const TransformSuite> Default();

  // Same as Default() but with minimal KDF cost and an optional
  // deterministic random source.
  static std::shared_ptr<const TransformSuite> Fast(RandomSource random = {});

  // "compressor=...;cipher=...;hash=...;crc=crc32-iso-hdlc"
  std::string Describe() const;
};

}  // namespace innamark

#endif  // INNAMARK_TRANSFORMS_H_
