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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace innamark::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args, const std::string& stdin_data = "",
               std::map<std::string, std::string> env = {}) {
  args.insert(args.begin(), "innamark");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_data);
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(),
                       Io{in, out, err, [env](const std::string& name) {
                            auto it = env.find(name);
                            return it == env.end()
                                       ? std::optional<std::string>()
                                       : std::optional<std::string>(it->second);
                          }});
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("innamark_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                 ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& data) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << data;
    return p.string();
  }

  static std::string Words(int spaces) {
    std::string s = "w";
    for (int i = 0; i < spaces; ++i) s += " w";
    return s;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, EmbedExtractRoundTripThroughStdin) {
  const auto cover = Write("c.txt", Words(60));
  const Outcome e = RunCli({"embed", "--cover", cover, "-m", "John"});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_EQ(e.out.find(' '), std::string::npos);
  const Outcome x = RunCli({"extract"}, e.out);
  EXPECT_EQ(x.code, kExitOk) << x.err;
  EXPECT_EQ(x.out, "John");
  const Outcome lit = RunCli({"extract", "--literal", "-"}, e.out);
  EXPECT_EQ(lit.out, "John");
}

TEST_F(CliTest, EmbedIsReproducibleWithoutEncryption) {
  const auto cover = Write("c.txt", Words(200));
  const auto a = RunCli({"embed", "--cover", cover, "-m", "hello", "--compress",
                         "--crc", "--hash", "--size"});
  const auto b = RunCli({"embed", "--cover", cover, "-m", "hello", "--compress",
                         "--crc", "--hash", "--size"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(RunCli({"extract"}, a.out).out, "hello");
}

TEST_F(CliTest, EncryptedRoundTrip) {
  const auto cover = Write("c.txt", Words(300));
  const std::map<std::string, std::string> env = {{"SECRET", "hunter2"}};
  const auto e = RunCli({"embed", "--cover", cover, "-m", "top secret",
                         "--encrypt", "--passphrase-env", "SECRET"},
                        "", env);
  ASSERT_EQ(e.code, kExitOk) << e.err;
  const auto ok = RunCli({"extract", "--passphrase-env", "SECRET"}, e.out, env);
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.out, "top secret");
  const auto missing = RunCli({"extract"}, e.out);
  EXPECT_EQ(missing.code, kExitExtraction);
  EXPECT_NE(missing.err.find("innamark: error: missing-key"), std::string::npos)
      << missing.err;
  const auto wrong = RunCli({"extract", "--passphrase-env", "SECRET"}, e.out,
                            {{"SECRET", "nope"}});
  EXPECT_EQ(wrong.code, kExitExtraction);
}

TEST_F(CliTest, EncryptWithoutPassphraseIsUsageError) {
  const auto cover = Write("c.txt", Words(300));
  const auto r = RunCli({"embed", "--cover", cover, "-m", "x", "--encrypt"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, CapacityReport) {
  const auto cover = Write("c.txt", Words(21));
  const auto r = RunCli({"capacity", "--cover", cover});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("4 bytes"), std::string::npos) << r.out;
  const auto crc = RunCli({"capacity", "--cover", cover, "--crc"});
  EXPECT_NE(crc.out.find("0 bytes"), std::string::npos) << crc.out;
}

TEST_F(CliTest, ErrorExitCodes) {
  const auto tiny = Write("tiny.txt", "a b");
  const auto cap = RunCli({"embed", "--cover", tiny, "-m", "J"});
  EXPECT_EQ(cap.code, kExitCapacity);
  EXPECT_EQ(cap.err.rfind("innamark: error: insufficient-capacity", 0), 0u)
      << cap.err;
  const auto nospace = Write("none.txt", "abc");
  EXPECT_EQ(RunCli({"embed", "--cover", nospace, "-m", "J"}).code, kExitCapacity);

  const auto plain = RunCli({"extract"}, "no marks here");
  EXPECT_EQ(plain.code, kExitExtraction);
  EXPECT_NE(plain.err.find("no-marks"), std::string::npos);

  EXPECT_EQ(RunCli({"embed", "--cover", (dir_ / "missing").string(), "-m", "J"})
                .code,
            kExitIo);
  EXPECT_EQ(RunCli({"extract"}, std::string("\xC3\x28", 2)).code, kExitIo);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"embed", "--cover", tiny, "--alphabet", "U+2004", "U+2008",
                    "U+2009", "U+202F", "U+0020", "-m", "J"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, CustomAlphabetMustMatch) {
  const auto cover = Write("c.txt", Words(40));
  const std::vector<std::string> alpha = {"--alphabet", "U+2000", "U+2001",
                                          "U+2002", "U+2003", "U+2005"};
  std::vector<std::string> embed = {"embed", "--cover", cover, "-m", "Hi"};
  embed.insert(embed.end(), alpha.begin(), alpha.end());
  const auto e = RunCli(embed);
  ASSERT_EQ(e.code, kExitOk) << e.err;
  std::vector<std::string> extract = {"extract"};
  extract.insert(extract.end(), alpha.begin(), alpha.end());
  EXPECT_EQ(RunCli(extract, e.out).out, "Hi");
  EXPECT_EQ(RunCli({"extract"}, e.out).code, kExitExtraction);
}

TEST_F(CliTest, InspectShowsTag) {
  const auto cover = Write("c.txt", Words(60));
  const auto e = RunCli({"embed", "--cover", cover, "-m", "John", "--crc"});
  const auto r = RunCli({"inspect"}, e.out);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("tag: 0x10"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("crc32=yes"), std::string::npos);
}

TEST_F(CliTest, BenchWritesCsv) {
  const auto csv = (dir_ / "r.csv").string();
  const auto json = (dir_ / "r.json").string();
  const auto r = RunCli({"bench", "--docs", "4", "--seed", "3", "--csv", csv,
                         "--json", json});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "algorithm,message_class,metric,fraction,value");
  EXPECT_TRUE(std::filesystem::exists(json));
}

// The real binary, wired through a pipe.
TEST_F(CliTest, BinaryPipeline) {
  const auto cover = Write("c.txt", Words(60));
  const std::string cmd = std::string(INNAMARK_CLI_PATH) + " embed --cover " +
                          cover + " -m John | " + INNAMARK_CLI_PATH + " extract";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(out, "John");
}

}  // namespace
}  // namespace innamark::cli
