// Copyright 2026 The adtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the installed command-line binary and checks its output and exit
// codes. The binary path comes from the build.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("adtlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("ex1.adt", "SAND([E], C([S1 & S2], ALLR([G])))\n");
    write("ex2.adt", "SAND([E], C([S1 & S2], ALLB(C([G], [D]))))\n");
    write("run.trc", "props: E,S1,S2,G\n{E}\n{S1,S2}\n\n{E}\n{G}\n{S1,S2}\n\n\n");
    write("sand.adt", "SAND(STRICT(!p), STRICT(p))\n");
    write("each.adt", "AND(STRICT(!p), STRICT(p))\n");
    write("bad.adt", "OR([p],\n");
    write("some.fo", "E x. letter({p}, x)\n");
    write("ab.sere", "{p}.{}\n");
    write("p.trc", "props: p\n{p}\n{}\n\n{}\n{p}\n");
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static Outcome run(const std::string& args) {
    std::string cmd = std::string(ADTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  static fs::path dir_;
};

fs::path Cli::dir_;

TEST_F(Cli, MemberPrintsOneLinePerTrace) {
  Outcome r = run("member --adt " + path("ex1.adt") + " --traces " + path("run.trc"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\nfalse\nfalse\n");
}

TEST_F(Cli, DepthOfTheDisguiseTree) {
  Outcome r = run("depth --adt " + path("ex2.adt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST_F(Cli, WitnessEnumeration) {
  Outcome r = run("witness 1 --enumerate 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ab\nabab\nababab\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("bound: 6"), std::string::npos);
}

TEST_F(Cli, WitnessTreesComeInThree) {
  Outcome r = run("witness 2 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "witness");
  for (const char* k : {"w", "plus", "minus"}) EXPECT_TRUE(j["result"].contains(k)) << k;
  EXPECT_EQ(j["depth"], 3);
}

TEST_F(Cli, EquivalenceVerdict) {
  Outcome r = run("equiv --adt " + path("sand.adt") + " --adt2 " + path("each.adt") +
              " --method bounded --maxlen 4 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["answer"], "no");
  EXPECT_EQ(j["witness"], "{} {p}");
  EXPECT_EQ(j["bound"], 4);
}

TEST_F(Cli, EnumerationPrintsItsBound) {
  Outcome r = run("enumerate --adt " + path("each.adt") + " --maxlen 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "bound: 3\n");
}

TEST_F(Cli, NonemptyAboveDepthOneIsBounded) {
  Outcome r = run("nonempty --adt " + path("ex2.adt") + " --maxlen 2 --props E,S1,S2,G,D");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("method: bounded"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bound: 2"), std::string::npos) << r.out;
}

TEST_F(Cli, FirstOrderCommands) {
  Outcome eval = run("fo-eval --fo " + path("some.fo") + " --traces " + path("p.trc"));
  EXPECT_EQ(eval.code, 0);
  EXPECT_EQ(eval.out, "true\ntrue\n");
  Outcome sat = run("fo-sat --fo " + path("some.fo") + " --maxlen 2");
  EXPECT_EQ(sat.code, 0);
  EXPECT_NE(sat.out.find("sat"), std::string::npos);
  Outcome s1 = run("sigma1-to-adt --fo " + path("some.fo") + " --format json");
  ASSERT_EQ(s1.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s1.out)["depth"], 0);
  Outcome fo = run("to-fo --adt " + path("sand.adt"));
  EXPECT_EQ(fo.code, 0);
  EXPECT_NE(fo.out.find("alternation: "), std::string::npos);
}

TEST_F(Cli, ExpressionCommands) {
  Outcome m = run("sere-member --sere " + path("ab.sere") + " --traces " + path("p.trc"));
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "true\nfalse\n");
  Outcome back = run("from-sere --sere " + path("ab.sere"));
  EXPECT_EQ(back.code, 0);
  Outcome to = run("to-sere --adt " + path("sand.adt"));
  EXPECT_EQ(to.code, 0);
}

TEST_F(Cli, ExitCodes) {
  Outcome parse = run("parse --adt " + path("bad.adt"));
  EXPECT_EQ(parse.code, 1);
  Outcome usage = run("frobnicate");
  EXPECT_EQ(usage.code, 1);
  Outcome missing = run("member --adt " + path("ex1.adt"));
  EXPECT_EQ(missing.code, 1);
  Outcome budget = run("enumerate --adt " + path("ex1.adt") + " --maxlen 30 --budget 1000");
  EXPECT_EQ(budget.code, 2);
}

TEST_F(Cli, JsonIsStable) {
  const std::string args = "gen --adt " + path("ex1.adt") + " --format json";
  Outcome a = run(args);
  Outcome b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["command"], "gen");
  EXPECT_TRUE(j["result"]["sound"].get<bool>());
  EXPECT_TRUE(j.contains("inputs"));
}

}  // namespace
