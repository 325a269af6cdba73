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

#ifndef INNAMARK_OPTIONS_H_
#define INNAMARK_OPTIONS_H_

#include <memory>
#include <optional>
#include <string>

#include "innamark/alphabet.h"
#include "innamark/transforms.h"

namespace innamark {

// Which optional stages an embedded payload uses. Serialized as the one-byte
// tag that leads every copy; see tag.h for the bit layout.
struct TagFlags {
  bool encryption = false;
  bool compression = false;
  bool hashing = false;
  bool crc32 = false;
  bool size_prefix = false;

  friend bool operator==(const TagFlags&, const TagFlags&) = default;
};

// Everything embedding and extraction need besides the texts themselves.
// Extraction ignores `flags` and reads them from the embedded tag instead.
struct Options {
  TagFlags flags;
  std::optional<std::string> passphrase;
  // Null selects TransformSuite::Default().
  std::shared_ptr<const TransformSuite> transforms;
  WhitespaceAlphabet alphabet = WhitespaceAlphabet::Default();

  const TransformSuite& suite() const {
    return transforms ? *transforms : *TransformSuite::Default();
  }
};

}  // namespace innamark

#endif  // INNAMARK_OPTIONS_H_
