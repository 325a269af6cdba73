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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "innamark/alphabet.h"
#include "innamark/bench/corpus.h"
#include "innamark/bench/schemes.h"
#include "innamark/bench/sweep.h"
#include "innamark/codec.h"
#include "innamark/embedder.h"
#include "innamark/error.h"
#include "innamark/extractor.h"
#include "innamark/tag.h"
#include "innamark/utf8.h"

namespace innamark::cli {
namespace {

// I/O failures outside the library's error codes.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadAll(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read standard input");
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

void WriteAll(const std::string& path, std::ostream& out,
              std::string_view data) {
  if (path.empty() || path == "-") {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!file) throw IoError("short write to " + path);
}

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoSpaces:
    case ErrorCode::kInsufficientCapacity:
      return kExitCapacity;
    case ErrorCode::kInvalidUtf8:
      return kExitIo;
    case ErrorCode::kDuplicateCharacter:
    case ErrorCode::kSpaceInAlphabet:
    case ErrorCode::kDigitCount:
    case ErrorCode::kDigitRange:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitExtraction;
  }
}

void Diagnose(std::ostream& err, std::string_view code, std::string_view what) {
  err << "innamark: error: " << code << ": " << what << '\n';
}

// Flags and settings shared by several subcommands.
struct Common {
  std::vector<std::string> alphabet;
  std::string passphrase_env = kDefaultPassphraseEnv;
  bool compress = false;
  bool encrypt = false;
  bool hash = false;
  bool crc = false;
  bool size = false;

  void AddAlphabet(CLI::App* app) {
    app->add_option("--alphabet", alphabet,
                    "Five code points U+XXXX, separator first")
        ->expected(5);
  }
  void AddPassphrase(CLI::App* app) {
    app->add_option("--passphrase-env", passphrase_env,
                    "Environment variable holding the passphrase")
        ->capture_default_str();
  }
  void AddFlags(CLI::App* app) {
    app->add_flag("--compress", compress, "Compress the message");
    app->add_flag("--encrypt", encrypt,
                  "Encrypt with the passphrase from --passphrase-env");
    app->add_flag("--hash", hash, "Add a truncated SHA-256 prefix");
    app->add_flag("--crc", crc, "Add a CRC-32 prefix");
    app->add_flag("--size", size, "Add a body size prefix");
  }

  Options Build(const EnvLookup& env) const {
    Options options;
    if (!alphabet.empty()) options.alphabet = WhitespaceAlphabet::Parse(alphabet);
    options.flags = TagFlags{encrypt, compress, hash, crc, size};
    if (auto value = env(passphrase_env); value && !value->empty()) {
      options.passphrase = *value;
    }
    if (encrypt && !options.passphrase) {
      throw UsageError("--encrypt needs a passphrase in $" + passphrase_env);
    }
    return options;
  }
};

std::string FlagsLine(const TagFlags& f) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream s;
  s << "encryption=" << yn(f.encryption) << " compression=" << yn(f.compression)
    << " hashing=" << yn(f.hashing) << " crc32=" << yn(f.crc32)
    << " size=" << yn(f.size_prefix);
  return s.str();
}

int Inspect(TextView text, const Options& options, std::ostream& out) {
  const std::vector<Segment> segments = Segments(text, options.alphabet);
  const Segment* first = nullptr;
  for (const Segment& s : segments) {
    if (s.anchored) {
      first = &s;
      break;
    }
  }
  out << "segments: " << segments.size() << '\n';
  if (first != nullptr && first->digits.size() >= DigitsPerByte(options.alphabet)) {
    const std::uint8_t tag = DecodeDigits(first->digits, options.alphabet).bytes[0];
    char hex[8];
    std::snprintf(hex, sizeof(hex), "0x%02X", tag);
    out << "tag: " << hex;
    try {
      out << ' ' << FlagsLine(ParseTag(tag)) << '\n';
    } catch (const Error& e) {
      out << " (" << ErrorCodeName(e.code()) << ")\n";
    }
  }
  const ExtractResult result = ExtractRobust(text, options);
  out << "valid: " << result.segments_valid << '\n';
  std::string status = "verified";
  if (result.HasWarning(ExtractWarning::kMajorityVote)) status = "majority-vote";
  if (result.HasWarning(ExtractWarning::kValidityFailed)) status = "unverified";
  out << "status: " << status << '\n';
  out << "message-bytes: " << result.message.size() << '\n';
  out << "warnings:";
  for (ExtractWarning w : result.warnings) out << ' ' << ExtractWarningName(w);
  out << '\n';
  return status == "unverified" ? kExitExtraction : kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, Io io) {
  EnvLookup env = io.env ? io.env : [](const std::string& name) {
    const char* v = std::getenv(name.c_str());
    return v ? std::optional<std::string>(v) : std::nullopt;
  };

  CLI::App app{"Hide byte payloads in the spaces of plain text"};
  app.name("innamark");
  app.require_subcommand(1);

  Common common;
  std::string cover_path;
  std::string input_path = "-";
  std::string output_path;
  std::string message;
  std::string message_file;
  bool literal = false;

  auto* embed = app.add_subcommand("embed", "Hide a message in a cover text");
  embed->add_option("--cover", cover_path, "Cover text file, - for stdin")->required();
  auto* msg_opt = embed->add_option("-m,--message", message, "Message text");
  auto* msg_file_opt =
      embed->add_option("--message-file", message_file, "Read message bytes from a file");
  msg_opt->excludes(msg_file_opt);
  embed->add_option("-o,--output", output_path, "Output file (default stdout)");
  common.AddFlags(embed);
  common.AddAlphabet(embed);
  common.AddPassphrase(embed);

  auto* extract = app.add_subcommand("extract", "Recover a hidden message");
  extract->add_option("input", input_path, "Marked text file, - for stdin");
  extract->add_flag("--literal", literal,
                    "Stop at the first copy exactly like the reference scan");
  extract->add_option("-o,--output", output_path, "Output file (default stdout)");
  common.AddAlphabet(extract);
  common.AddPassphrase(extract);

  auto* inspect = app.add_subcommand(
      "inspect", "Report tag, copies and validity without printing the message");
  inspect->add_option("input", input_path, "Marked text file, - for stdin");
  common.AddAlphabet(inspect);
  common.AddPassphrase(inspect);

  auto* capacity = app.add_subcommand("capacity", "Largest message a cover can hold");
  capacity->add_option("--cover", cover_path, "Cover text file, - for stdin")->required();
  common.AddFlags(capacity);
  common.AddAlphabet(capacity);

  std::string corpus_dir;
  std::size_t docs = 200;
  std::uint64_t seed = bench::BenchmarkConfig{}.master_seed;
  unsigned threads = 1;
  std::string csv_path;
  std::string json_path;
  auto* bench_cmd = app.add_subcommand("bench", "Run the evaluation sweep");
  bench_cmd->add_option("--corpus", corpus_dir, "Directory of *.txt cover texts");
  bench_cmd->add_option("--docs", docs, "Generated documents when no --corpus")
      ->capture_default_str();
  bench_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
  bench_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  bench_cmd->add_option("--csv", csv_path, "Write CSV report here (- for stdout)");
  bench_cmd->add_option("--json", json_path, "Write JSON report here (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, io.out, io.err);
      return kExitOk;
    }
    Diagnose(io.err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (embed->parsed()) {
      if (msg_opt->count() == 0 && msg_file_opt->count() == 0) {
        throw UsageError("one of --message or --message-file is required");
      }
      const Options options = common.Build(env);
      const Text cover = DecodeUtf8(ReadAll(cover_path, io.in));
      const std::string payload =
          msg_file_opt->count() ? ReadAll(message_file, io.in) : message;
      const WatermarkResult result = Embed(
          cover, std::span(reinterpret_cast<const std::uint8_t*>(payload.data()),
                           payload.size()),
          options);
      WriteAll(output_path, io.out, EncodeUtf8(result.text));
      return kExitOk;
    }
    if (extract->parsed()) {
      const Options options = common.Build(env);
      const Text text = DecodeUtf8(ReadAll(input_path, io.in));
      const ExtractResult result = Extract(
          text, literal ? ExtractMode::kLiteral : ExtractMode::kRobust, options);
      WriteAll(output_path, io.out,
               std::string_view(reinterpret_cast<const char*>(result.message.data()),
                                result.message.size()));
      if (result.HasWarning(ExtractWarning::kValidityFailed)) {
        Diagnose(io.err, "validity-failed",
                 "no copy verified; output is a best-effort decode");
        return kExitExtraction;
      }
      return kExitOk;
    }
    if (inspect->parsed()) {
      const Options options = common.Build(env);
      return Inspect(DecodeUtf8(ReadAll(input_path, io.in)), options, io.out);
    }
    if (capacity->parsed()) {
      const Options options = common.Build(env);
      const Text cover = DecodeUtf8(ReadAll(cover_path, io.in));
      const std::size_t bytes = CapacityBytes(cover, options.flags, options.alphabet);
      io.out << bytes << " bytes\n";
      const double ratio =
          cover.empty() ? 0.0 : 8.0 * static_cast<double>(bytes) / static_cast<double>(cover.size());
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f bits/char\n", ratio);
      io.out << buf;
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      bench::BenchmarkConfig config;
      config.master_seed = seed;
      config.threads = threads;
      std::vector<bench::Document> corpus;
      if (!corpus_dir.empty()) {
        corpus = bench::LoadCorpus(corpus_dir);
        config.corpus_label = corpus_dir;
      } else {
        corpus = bench::GenerateCorpus(docs, seed);
        config.corpus_label = "generated:" + std::to_string(docs);
      }
      Options innamark_options;
      config.strategies = innamark_options.suite().Describe();
      const bench::InnamarkScheme robust(ExtractMode::kRobust, innamark_options);
      const bench::InnamarkScheme literal_scheme(ExtractMode::kLiteral, innamark_options);
      const bench::ZeroWidthScheme zero_width;
      const bench::TrailingWhitespaceScheme trailing;
      const std::vector<const bench::Scheme*> schemes = {&robust, &literal_scheme,
                                                         &zero_width, &trailing};
      const bench::BenchmarkReport report = bench::RunBenchmark(corpus, schemes, config);
      if (csv_path.empty() && json_path.empty()) csv_path = "-";
      if (!csv_path.empty()) WriteAll(csv_path, io.out, report.ToCsv());
      if (!json_path.empty()) WriteAll(json_path, io.out, report.ToJson());
      return kExitOk;
    }
  } catch (const UsageError& e) {
    Diagnose(io.err, "usage", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    Diagnose(io.err, "io-error", e.what());
    return kExitIo;
  } catch (const Error& e) {
    Diagnose(io.err, ErrorCodeName(e.code()), e.what());
    return ExitFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    Diagnose(io.err, "io-error", e.what());
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace innamark::cli
