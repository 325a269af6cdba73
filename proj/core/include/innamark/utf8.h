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

#ifndef INNAMARK_UTF8_H_
#define INNAMARK_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace innamark {

using CodePoint = char32_t;
using Text = std::u32string;
using TextView = std::u32string_view;

// Strict decoding: overlong forms, surrogates, values above U+10FFFF and
// truncated sequences all raise Error(kInvalidUtf8) with the byte offset.
Text DecodeUtf8(std::string_view bytes);

std::string EncodeUtf8(TextView text);

// Number of bytes the code point occupies when UTF-8 encoded (1..4).
std::size_t Utf8Width(CodePoint c);

std::size_t Utf8Length(TextView text);

}  // namespace innamark

#endif  // INNAMARK_UTF8_H_
