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

#include "innamark/transforms.h"

#include <sodium.h>
#include <zlib.h>

#include <algorithm>
#include <limits>

namespace innamark {
namespace {

constexpr std::array<std::uint32_t, 256> MakeCrcTable() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1) ? (c >> 1) ^ 0xEDB88320u : c >> 1;
    table[i] = c;
  }
  return table;
}

constexpr auto kCrcTable = MakeCrcTable();

void EnsureSodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw std::runtime_error("libsodium initialization failed");
}

}  // namespace

std::uint32_t Crc32(std::span<const std::uint8_t> data) {
  std::uint32_t c = 0xFFFFFFFFu;
  for (std::uint8_t b : data) c = kCrcTable[(c ^ b) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

Bytes ZlibCompressor::Compress(std::span<const std::uint8_t> data) const {
  uLongf bound = compressBound(static_cast<uLong>(data.size()));
  Bytes out(bound);
  const int rc = compress2(out.data(), &bound, data.data(),
                           static_cast<uLong>(data.size()), Z_BEST_COMPRESSION);
  if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed");
  out.resize(bound);
  return out;
}

Bytes ZlibCompressor::Decompress(std::span<const std::uint8_t> data) const {
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) throw std::runtime_error("inflateInit failed");
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  Bytes out;
  std::array<std::uint8_t, 16384> chunk;
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = chunk.data();
    zs.avail_out = static_cast<uInt>(chunk.size());
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) break;
    out.insert(out.end(), chunk.data(),
               chunk.data() + (chunk.size() - zs.avail_out));
    if (out.size() > max_output_) {
      rc = Z_MEM_ERROR;
      break;
    }
    if (rc == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      rc = Z_DATA_ERROR;  // input ended before the stream did
      break;
    }
  }
  const bool trailing = zs.avail_in != 0;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || trailing) {
    throw Error(ErrorCode::kDecompressFailure, "corrupt compressed body");
  }
  return out;
}

KdfLimits KdfLimits::Interactive() {
  return {crypto_pwhash_argon2id_OPSLIMIT_INTERACTIVE,
          crypto_pwhash_argon2id_MEMLIMIT_INTERACTIVE};
}

KdfLimits KdfLimits::Minimal() {
  return {crypto_pwhash_argon2id_OPSLIMIT_MIN,
          crypto_pwhash_argon2id_MEMLIMIT_MIN};
}

PassphraseCipher::PassphraseCipher(KdfLimits limits, RandomSource random)
    : limits_(limits),
      random_(std::move(random)),
      id_("argon2id(ops=" + std::to_string(limits.ops) +
          ",mem=" + std::to_string(limits.mem) + ")+xchacha20poly1305") {
  EnsureSodium();
}

std::array<std::uint8_t, 32> PassphraseCipher::DeriveKey(
    std::string_view passphrase, std::span<const std::uint8_t> salt) const {
  std::array<std::uint8_t, 32> key;
  if (crypto_pwhash(key.data(), key.size(), passphrase.data(),
                    passphrase.size(), salt.data(), limits_.ops, limits_.mem,
                    crypto_pwhash_ALG_ARGON2ID13) != 0) {
    throw std::runtime_error("argon2id key derivation out of memory");
  }
  return key;
}

Bytes PassphraseCipher::Encrypt(std::span<const std::uint8_t> plain,
                                std::string_view passphrase) const {
  if (passphrase.empty()) {
    throw Error(ErrorCode::kMissingKey, "encryption needs a passphrase");
  }
  Bytes out(kSaltSize + kNonceSize + plain.size() + kMacSize);
  std::span<std::uint8_t> header(out.data(), kSaltSize + kNonceSize);
  if (random_) {
    random_(header);
  } else {
    randombytes_buf(header.data(), header.size());
  }
  auto key = DeriveKey(passphrase, header.first(kSaltSize));
  unsigned long long written = 0;
  crypto_aead_xchacha20poly1305_ietf_encrypt(
      out.data() + header.size(), &written, plain.data(), plain.size(),
      nullptr, 0, nullptr, out.data() + kSaltSize, key.data());
  sodium_memzero(key.data(), key.size());
  out.resize(header.size() + written);
  return out;
}

Bytes PassphraseCipher::Decrypt(std::span<const std::uint8_t> sealed,
                                std::string_view passphrase) const {
  if (passphrase.empty()) {
    throw Error(ErrorCode::kMissingKey, "decryption needs a passphrase");
  }
  if (sealed.size() < kOverhead) {
    throw Error(ErrorCode::kDecryptFailure, "ciphertext too short");
  }
  auto key = DeriveKey(passphrase, sealed.first(kSaltSize));
  Bytes out(sealed.size() - kOverhead);
  unsigned long long written = 0;
  const auto body = sealed.subspan(kSaltSize + kNonceSize);
  const int rc = crypto_aead_xchacha20poly1305_ietf_decrypt(
      out.data(), &written, nullptr, body.data(), body.size(), nullptr, 0,
      sealed.data() + kSaltSize, key.data());
  sodium_memzero(key.data(), key.size());
  if (rc != 0) {
    throw Error(ErrorCode::kDecryptFailure,
                "authentication failed (wrong passphrase or tampered data)");
  }
  out.resize(written);
  return out;
}

Digest Sha256Hasher::Hash(std::span<const std::uint8_t> data) const {
  EnsureSodium();
  std::array<std::uint8_t, crypto_hash_sha256_BYTES> full;
  crypto_hash_sha256(full.data(), data.data(), data.size());
  Digest d;
  std::copy_n(full.begin(), kDigestSize, d.begin());
  return d;
}

std::shared_ptr<const TransformSuite> TransformSuite::Default() {
  static const auto suite = std::make_shared<const TransformSuite>(
      TransformSuite{std::make_shared<ZlibCompressor>(),
                     std::make_shared<PassphraseCipher>(),
                     std::make_shared<Sha256Hasher>()});
  return suite;
}

std::shared_ptr<const TransformSuite> TransformSuite::Fast(
    RandomSource random) {
  return std::make_shared<const TransformSuite>(TransformSuite{
      std::make_shared<ZlibCompressor>(),
      std::make_shared<PassphraseCipher>(KdfLimits::Minimal(),
                                         std::move(random)),
      std::make_shared<Sha256Hasher>()});
}

std::string TransformSuite::Describe() const {
  return "compressor=" + std::string(compressor->id()) +
         ";cipher=" + std::string(cipher->id()) +
         ";hash=" + std::string(hasher->id()) + ";crc=crc32-iso-hdlc";
}

}  // namespace innamark
