// Copyright 2026 the sd2 authors
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

// Runs the sd2 binary as a subprocess.

#include <sys/wait.h>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include "core/codec.h"
#include "core/corpus.h"
#include "core/expression.h"
#include "core/hist_engine.h"
#include "core/scholar_sets.h"
#include "json.hpp"
#include "test_support.h"

namespace sd2 {
namespace {

using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;  // stdout only
};

std::string Quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

RunResult RunCli(const std::string& args, const std::string& err_file) {
  const std::string cmd =
      Quote(SD2_CLI_PATH) + " " + args + " 2>" + Quote(err_file);
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::ScratchDir(
        std::string("cli_") +
        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    err_ = dir_ + "/stderr.txt";
    store_ = dir_ + "/corpus.sd2";
  }

  std::string IngestArgs(const CorpusPaths& p, const std::string& out) {
    return "ingest --papers " + Quote(p.papers) + " --citations " + Quote(p.citations) +
           " --venues " + Quote(p.venues) + " --profiles " + Quote(p.profiles) +
           " --out " + Quote(out);
  }

  void Ingest() {
    const RunResult r = RunCli(IngestArgs(testing::SmallFixture(), store_), err_);
    ASSERT_EQ(r.exit_code, 0) << testing::ReadFile(err_);
  }

  std::string dir_, err_, store_;
};

TEST_F(CliTest, IngestWritesStoreAndReport) {
  const std::string report = dir_ + "/report.json";
  const RunResult r = RunCli(IngestArgs(testing::SmallFixture(), store_) + " --report " +
                              Quote(report),
                          err_);
  ASSERT_EQ(r.exit_code, 0) << testing::ReadFile(err_);
  EXPECT_EQ(json::parse(testing::ReadFile(report)),
            json::parse(testing::ReadFile(
                testing::SourcePath("tests/data/small/golden_report.json"))));
  EXPECT_FALSE(testing::ReadFile(store_).empty());
}

TEST_F(CliTest, MissingInputExitsTwo) {
  CorpusPaths p = testing::SmallFixture();
  p.citations = dir_ + "/absent.csv";
  const RunResult r = RunCli(IngestArgs(p, store_), err_);
  EXPECT_EQ(r.exit_code, 2);
  const std::string err = testing::ReadFile(err_);
  EXPECT_NE(err.find("FileNotReadable"), std::string::npos) << err;
  EXPECT_NE(err.find(p.citations), std::string::npos) << err;
}

TEST_F(CliTest, DuplicatePaperExitsThree) {
  CorpusPaths p = testing::SmallFixture();
  std::string papers = testing::ReadFile(p.papers);
  papers += papers.substr(0, papers.find('\n') + 1);
  p.papers = dir_ + "/papers.jsonl";
  testing::WriteFile(p.papers, papers);
  const RunResult r = RunCli(IngestArgs(p, store_), err_);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(testing::ReadFile(err_).find("p01"), std::string::npos);
}

TEST_F(CliTest, MalformedQueryExitsFour) {
  Ingest();
  const std::string base = "query --store " + Quote(store_);
  EXPECT_EQ(RunCli(base + " --expr '- Courville'", err_).exit_code, 4);
  EXPECT_EQ(RunCli(base + " --expr Bengio --chain P.Year,P.Year", err_).exit_code, 4);
  EXPECT_EQ(RunCli(base + " --expr Bengio --chain P.Nope", err_).exit_code, 4);
  EXPECT_EQ(RunCli(base + " --expr Nobody", err_).exit_code, 1);
  EXPECT_EQ(RunCli("query --expr Bengio", err_).exit_code, 2);
}

TEST_F(CliTest, QueryMatchesLibrary) {
  Ingest();
  const RunResult r = RunCli("query --store " + Quote(store_) +
                              " --expr 'Bengio | Goodfellow' --chain P.CcfRank,P.Year"
                              " --scale log",
                          err_);
  ASSERT_EQ(r.exit_code, 0) << testing::ReadFile(err_);

  const Corpus corpus = Corpus::Load(testing::SmallFixture());
  const PaperSet set = Combine(corpus, ParseExpression(corpus, "Bengio | Goodfellow"));
  HierarchyQuery q = QueryFromJson(
      {{"chain", {"P.CcfRank", "P.Year"}}, {"scale", "log"}});
  const json expected =
      HierarchyToJson(corpus, BuildHierarchy(corpus, set, q.request), q.scale);
  EXPECT_EQ(json::parse(r.out).dump(), expected.dump());
}

TEST_F(CliTest, CsvLeavesMatchTimeline) {
  Ingest();
  const RunResult r =
      RunCli("query --store " + Quote(store_) + " --expr Courville --format csv", err_);
  ASSERT_EQ(r.exit_code, 0) << testing::ReadFile(err_);
  EXPECT_EQ(r.out,
            "P.Year,papers,height_linear\n2015,1,1.0\n2016,1,1.0\n2019,1,1.0\n"
            "2021,1,1.0\nUnknown,1,1.0\n");
}

TEST_F(CliTest, StoreFromEnvironment) {
  Ingest();
  const RunResult r = RunCli("query --expr Hinton", err_);
  EXPECT_EQ(r.exit_code, 2);
  const std::string cmd = "env SD2_STORE=" + Quote(store_) + " " +
                          Quote(SD2_CLI_PATH) + " query --expr Hinton 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
  EXPECT_EQ(json::parse(out)["root"]["measure"], 2);
}

}  // namespace
}  // namespace sd2
