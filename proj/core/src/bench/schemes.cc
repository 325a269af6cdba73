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

#include "innamark/bench/schemes.h"

#include <algorithm>

#include "innamark/embedder.h"
#include "innamark/error.h"

namespace innamark::bench {
namespace {

template <typename Sink>
void EmitBits(std::span<const std::uint8_t> message, Sink&& sink) {
  for (std::uint8_t byte : message) {
    for (int bit = 7; bit >= 0; --bit) sink(((byte >> bit) & 1) != 0);
  }
}

std::optional<Bytes> PackBits(const std::vector<bool>& bits) {
  if (bits.empty() || bits.size() % 8 != 0) return std::nullopt;
  Bytes out(bits.size() / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

}  // namespace

InnamarkScheme::InnamarkScheme(ExtractMode mode, Options options)
    : mode_(mode),
      options_(std::move(options)),
      name_(mode == ExtractMode::kLiteral ? "innamark-literal" : "innamark") {}

std::optional<Text> InnamarkScheme::Embed(
    TextView cover, std::span<const std::uint8_t> message) const {
  try {
    return innamark::Embed(cover, message, options_).text;
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

std::optional<Bytes> InnamarkScheme::Extract(TextView text) const {
  try {
    return innamark::Extract(text, mode_, options_).message;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::size_t InnamarkScheme::MaxPayloadBytes(TextView cover) const {
  return CapacityBytes(cover, options_.flags, options_.alphabet);
}

Text BaselineZeroWidthEmbed(TextView cover,
                            std::span<const std::uint8_t> message) {
  Text hidden;
  hidden.reserve(message.size() * 8);
  EmitBits(message, [&](bool one) {
    hidden.push_back(one ? kZeroWidthOne : kZeroWidthZero);
  });
  const std::size_t first_space = cover.find(kSpace);
  const std::size_t at =
      first_space == TextView::npos ? cover.size() : first_space + 1;
  Text out(cover.substr(0, at));
  out += hidden;
  out += cover.substr(at);
  return out;
}

std::optional<Bytes> BaselineZeroWidthExtract(TextView text) {
  std::vector<bool> bits;
  for (CodePoint c : text) {
    if (c == kZeroWidthZero || c == kZeroWidthOne) bits.push_back(c == kZeroWidthOne);
  }
  return PackBits(bits);
}

Text BaselineTrailingEmbed(TextView cover,
                           std::span<const std::uint8_t> message) {
  Text out(cover);
  out.push_back(U'\n');
  EmitBits(message, [&](bool one) { out.push_back(one ? U'\t' : U' '); });
  return out;
}

std::optional<Bytes> BaselineTrailingExtract(TextView text) {
  const std::size_t newline = text.rfind(U'\n');
  if (newline == TextView::npos) return std::nullopt;
  std::vector<bool> bits;
  for (CodePoint c : text.substr(newline + 1)) {
    if (c != U' ' && c != U'\t') return std::nullopt;
    bits.push_back(c == U'\t');
  }
  return PackBits(bits);
}

}  // namespace innamark::bench
