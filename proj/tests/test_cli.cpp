#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using dnaprover::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / ("dnaprove_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(CliProve, FixtureS) {
  const Result r = call({"prove", "--fixture", "S"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: Unsat"), std::string::npos);
  EXPECT_NE(r.out.find("leaves: 6, resolutions: 5"), std::string::npos);
}

TEST(CliProve, GoalAndSatisfiable) {
  const std::string p = write_temp("p.txt", "P\n");
  EXPECT_EQ(call({"prove", "-i", p}).code, 1);
  const Result r = call({"prove", "-i", p, "--goal", "P", "--trace"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3: {} [1 ⊗ 2 on P]"), std::string::npos);
}

TEST(CliProve, InputFormats) {
  EXPECT_EQ(call({"prove", "-i", write_temp("f.txt", "P & ~P")}).code, 0);
  EXPECT_EQ(call({"prove", "-i", write_temp("d.cnf", "p cnf 1 2\n1 0\n-1 0\n")}).code, 0);
  EXPECT_EQ(call({"prove", "-i", write_temp("c.txt", "P Q\n~Q\n")}).code, 1);
  EXPECT_EQ(call({"prove", "-i", write_temp("s.txt", "P Q"), "--input-format", "formula"}).code, 4);
}

TEST(CliProve, Json) {
  const Result r = call({"prove", "--fixture", "S", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Unsat");
  EXPECT_EQ(j["leaves"].size(), 6u);
}

TEST(CliCompile, WorkedExample) {
  const Result r = call({"compile", "--fixture", "S"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("process: <P Q* R> | <U* V R*> | <Q> | <V*> | <P*> | <U>"), std::string::npos);
  EXPECT_NE(r.out.find("ACGTAGTCACGAATTGACTGTCAGTCGAAT"), std::string::npos);
  const std::string cb = write_temp("cb.txt", "P AACG\n");
  EXPECT_EQ(call({"compile", "-i", write_temp("pp.txt", "P\n~P\n"), "--codebook", cb}).code, 0);
}

TEST(CliCompare, Agreement) {
  EXPECT_EQ(call({"compare", "--fixture", "S"}).code, 0);
  EXPECT_EQ(call({"compare", "-i", write_temp("one.txt", "P\n")}).code, 0);
}

TEST(CliCompare, Divergence) {
  const Result r = call({"compare", "-i", write_temp("div.txt", "P\n~P\nQ\n")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("resolution: Unsat"), std::string::npos);
  EXPECT_NE(r.out.find("hybridization: Satisfiable"), std::string::npos);
  EXPECT_NE(r.out.find("DISAGREE"), std::string::npos);
  EXPECT_NE(r.out.find("(3,1) Q"), std::string::npos);
}

TEST(CliCompare, Indeterminate) {
  const std::string f = write_temp("chain.txt", "P ~Q\nQ ~R\nR ~U\nU ~V\nV\n~P\n");
  EXPECT_EQ(call({"compare", "-i", f, "--max-states", "2"}).code, 2);
}

TEST(CliSimulate, Fixtures) {
  const Result four = call({"simulate", "--fixture", "fourway"});
  EXPECT_EQ(four.code, 0);
  EXPECT_NE(four.out.find("RM(j1,j2) => GM"), std::string::npos);
  EXPECT_NE(four.out.find("(explore depth 3)"), std::string::npos);
  const Result theorem = call({"simulate", "--fixture", "theorem"});
  EXPECT_NE(theorem.out.find("all sites bound at depth 5"), std::string::npos);
  const Result hairpin = call({"simulate", "--fixture", "hairpin", "--format", "json"});
  const auto j = nlohmann::json::parse(hairpin.out);
  ASSERT_EQ(j["script"].size(), 5u);
  EXPECT_EQ(j["script"][1]["rule"], "G3");
  const Result dot = call({"simulate", "--fixture", "theorem", "--format", "dot"});
  EXPECT_NE(dot.out.find("graph step5 {"), std::string::npos);
}

TEST(CliSimulate, ProcessAndGraphInput) {
  const Result r = call({"simulate", "-i", write_temp("proc.txt", "<t^ a> | <t^* a*>")});
  EXPECT_EQ(r.code, 0);
  const Result e = call({"export", "-i", write_temp("proc2.txt", "<a> | <a*>"), "--format", "json"});
  ASSERT_EQ(e.code, 0);
  const Result g = call({"simulate", "-i", write_temp("graph.json", e.out)});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("1 terminal"), std::string::npos);
}

TEST(CliBounds, FlagBeatsEnvironmentBeatsDefault) {
  ::setenv("DNAPROVE_MAX_STATES", "3", 1);
  EXPECT_EQ(call({"simulate", "--fixture", "theorem"}).code, 2);
  EXPECT_EQ(call({"simulate", "--fixture", "theorem", "--max-states", "1000"}).code, 0);
  ::setenv("DNAPROVE_MAX_STATES", "zero", 1);
  EXPECT_EQ(call({"simulate", "--fixture", "theorem"}).code, 4);
  ::unsetenv("DNAPROVE_MAX_STATES");
  EXPECT_EQ(call({"simulate", "--fixture", "theorem"}).code, 0);
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(call({}).code, 4);
  EXPECT_EQ(call({"prove"}).code, 4);
  EXPECT_EQ(call({"prove", "--fixture", "nope"}).code, 4);
  EXPECT_EQ(call({"prove", "--fixture", "hairpin"}).code, 4);
  EXPECT_EQ(call({"prove", "--fixture", "S", "-i", "x"}).code, 4);
  EXPECT_EQ(call({"prove", "-i", "/nonexistent/file"}).code, 4);
  EXPECT_EQ(call({"simulate", "--fixture", "S", "--max-depth", "0"}).code, 4);
  EXPECT_EQ(call({"--help"}).code, 0);
}
