// Copyright 2026 The Gapsent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the command-line tool and checks exit codes and outputs.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "synthetic.h"

namespace gapsent {
namespace {

namespace fs = std::filesystem;

// Runs the tool with `args`; stdout goes to `stdout_path`.
int RunCli(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd = std::string(GAPSENT_CLI_PATH) + " " + args + " >" +
                          stdout_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = synthetic::TempPath("cli");
    fs::create_directories(dir_);
    std::ofstream(dir_ / "docs.jsonl")
        << "{\"id\": \"a\", \"text\": \"One here. Two here. Three here.\"}\n";
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, BuildSucceeds) {
  EXPECT_EQ(RunCli("build --input " + P("docs.jsonl") + " --output " +
                P("out.jsonl") + " --strategy seq-orig --gsr 0.45 --mlm"),
            0);
  const auto rec = nlohmann::json::parse(synthetic::ReadFile(P("out.jsonl")));
  EXPECT_EQ(rec["id"], "a");
}

TEST_F(CliTest, ConfigErrorsExitOne) {
  EXPECT_EQ(RunCli("build --input " + P("docs.jsonl") + " --output " +
                P("o.jsonl") + " --strategy nope"),
            1);
  EXPECT_EQ(RunCli("build --input " + P("docs.jsonl") + " --output " +
                P("o.jsonl") + " --gsr 1.5"),
            1);
  EXPECT_EQ(RunCli("frobnicate"), 1);
}

TEST_F(CliTest, IoErrorsExitTwo) {
  EXPECT_EQ(RunCli("build --input " + P("missing.jsonl") + " --output " +
                P("o.jsonl")),
            2);
  EXPECT_EQ(RunCli("stats --input " + P("missing.jsonl")), 2);
}

TEST_F(CliTest, RougeIdMismatchExitsOne) {
  std::ofstream(P("c.jsonl")) << "{\"id\": \"x\", \"text\": \"a\"}\n";
  std::ofstream(P("r.jsonl")) << "{\"id\": \"y\", \"text\": \"a\"}\n";
  EXPECT_EQ(RunCli("rouge --candidates " + P("c.jsonl") + " --references " +
                P("r.jsonl")),
            1);
  EXPECT_EQ(RunCli("rouge --candidates " + P("r.jsonl") + " --references " +
                P("r.jsonl") + " --summary-json",
                P("s.json")),
            0);
  const auto s = nlohmann::json::parse(synthetic::ReadFile(P("s.json")));
  EXPECT_DOUBLE_EQ(s["rouge1_f1"].get<double>(), 1.0);
}

TEST_F(CliTest, SegmentAndOverlap) {
  EXPECT_EQ(RunCli("segment --input " + P("docs.jsonl") + " --output " +
                P("seg.jsonl")),
            0);
  EXPECT_EQ(RunCli("overlap --targets " + P("docs.jsonl") + " --corpus " +
                P("docs.jsonl") + " --output " + P("ov.jsonl")),
            0);
  const auto row = nlohmann::json::parse(synthetic::ReadFile(P("ov.jsonl")));
  EXPECT_DOUBLE_EQ(row["max_similarity"].get<double>(), 1.0);
}

}  // namespace
}  // namespace gapsent
