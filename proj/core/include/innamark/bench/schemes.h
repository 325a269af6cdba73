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

#ifndef INNAMARK_BENCH_SCHEMES_H_
#define INNAMARK_BENCH_SCHEMES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "innamark/extractor.h"
#include "innamark/options.h"
#include "innamark/utf8.h"

namespace innamark::bench {

// An information-hiding method under evaluation.
class Scheme {
 public:
  virtual ~Scheme() = default;
  virtual std::string_view name() const = 0;
  // Unbounded schemes can take a message of any length.
  virtual bool bounded() const = 0;
  // nullopt when the cover cannot hold the message.
  virtual std::optional<Text> Embed(TextView cover,
                                    std::span<const std::uint8_t> message) const = 0;
  // nullopt when nothing could be recovered.
  virtual std::optional<Bytes> Extract(TextView text) const = 0;
  // Only meaningful for bounded schemes.
  virtual std::size_t MaxPayloadBytes(TextView cover) const = 0;
};

class InnamarkScheme final : public Scheme {
 public:
  explicit InnamarkScheme(ExtractMode mode, Options options = {});

  std::string_view name() const override { return name_; }
  bool bounded() const override { return true; }
  std::optional<Text> Embed(TextView cover,
                            std::span<const std::uint8_t> message) const override;
  std::optional<Bytes> Extract(TextView text) const override;
  std::size_t MaxPayloadBytes(TextView cover) const override;

 private:
  ExtractMode mode_;
  Options options_;
  std::string name_;
};

// Zero-width insertion baseline: the message bits, most significant first,
// as U+200B (0) and U+200C (1), inserted right after the first space (or at
// the end of a cover without spaces).
inline constexpr CodePoint kZeroWidthZero = U'\u200B';
inline constexpr CodePoint kZeroWidthOne = U'\u200C';

Text BaselineZeroWidthEmbed(TextView cover, std::span<const std::uint8_t> message);
std::optional<Bytes> BaselineZeroWidthExtract(TextView text);

// Trailing whitespace baseline: a newline, then the message bits as
// space (0) and tab (1), appended after the end of the cover.
Text BaselineTrailingEmbed(TextView cover, std::span<const std::uint8_t> message);
std::optional<Bytes> BaselineTrailingExtract(TextView text);

class ZeroWidthScheme final : public Scheme {
 public:
  std::string_view name() const override { return "zero-width"; }
  bool bounded() const override { return false; }
  std::optional<Text> Embed(TextView cover,
                            std::span<const std::uint8_t> message) const override {
    return BaselineZeroWidthEmbed(cover, message);
  }
  std::optional<Bytes> Extract(TextView text) const override {
    return BaselineZeroWidthExtract(text);
  }
  std::size_t MaxPayloadBytes(TextView) const override { return 0; }
};

class TrailingWhitespaceScheme final : public Scheme {
 public:
  std::string_view name() const override { return "trailing-whitespace"; }
  bool bounded() const override { return false; }
  std::optional<Text> Embed(TextView cover,
                            std::span<const std::uint8_t> message) const override {
    return BaselineTrailingEmbed(cover, message);
  }
  std::optional<Bytes> Extract(TextView text) const override {
    return BaselineTrailingExtract(text);
  }
  std::size_t MaxPayloadBytes(TextView) const override { return 0; }
};

}  // namespace innamark::bench

#endif  // INNAMARK_BENCH_SCHEMES_H_
