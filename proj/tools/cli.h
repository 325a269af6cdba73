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

#ifndef INNAMARK_TOOLS_CLI_H_
#define INNAMARK_TOOLS_CLI_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace innamark::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitCapacity = 2,
  kExitExtraction = 3,
  kExitIo = 4,
};

inline constexpr const char* kDefaultPassphraseEnv = "INNAMARK_PASSPHRASE";

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  // Defaults to std::getenv.
  EnvLookup env;
};

// Subcommands: embed, extract, inspect, capacity, bench. Failures print one
// line "innamark: error: <code>: <detail>" on `err` and map to ExitCode.
int Run(int argc, const char* const* argv, Io io);

}  // namespace innamark::cli

#endif  // INNAMARK_TOOLS_CLI_H_
