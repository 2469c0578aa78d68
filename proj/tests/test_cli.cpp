#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qinv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::vector<std::vector<std::string>> json_corpus() {
  std::vector<std::vector<std::string>> cmds;
  for (const auto& [braid, value] : qtest::read_golden("jones.txt")) {
    cmds.push_back({"jones", "--braid", braid, "--json"});
    cmds.push_back({"jones", "--braid", braid, "--level", "3", "--json"});
    cmds.push_back({"bracket", "--braid", braid, "--json"});
    cmds.push_back({"parse", "--braid", braid, "--json"});
    cmds.push_back({"skein-check", "--braid", braid, "--json"});
  }
  for (const auto& [pd, braid] : qtest::read_golden("pd_corpus.txt")) {
    cmds.push_back({"jones", "--pd", pd, "--json"});
    cmds.push_back({"bracket", "--pd", pd, "--json"});
    cmds.push_back({"parse", "--pd", pd, "--json"});
    cmds.push_back({"skein-check", "--pd", pd, "--level", "4", "--json"});
  }
  cmds.push_back({"fusion-dim", "--level", "3", "--marked", "1,1,1,1", "--json"});
  cmds.push_back({"verlinde", "--level", "2", "--genus", "2", "--json"});
  cmds.push_back({"verlinde", "--level", "4", "--marked", "1,1,2", "--json"});
  cmds.push_back({"tqft-eval", "--algebra", "z2", "--cobordism", R"(["cap",["copants"],["pants"],"cup"])", "--json"});
  cmds.push_back({"tqft-eval", "--algebra", "verlinde:3", "--cobordism", R"([["pants"]])", "--json"});
  cmds.push_back({"gq-check", "--f", "q1^2*p1 + 3*q2", "--g", "p1", "--json"});
  cmds.push_back({"gq-check", "--f", "q1", "--g", "p1", "--rep", "schrodinger", "--json"});
  return cmds;
}

}  // namespace

TEST(Cli, Examples) {
  auto r = run({"jones", "--braid", "B2 1 1 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trimmed(r.out), "-s^8 + s^6 + s^2");

  r = run({"fusion-dim", "--level", "3", "--marked", "1,1,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trimmed(r.out), "2");

  r = run({"jones", "--braid", "B2 5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());

  r = run({"gq-check", "--f", "q1", "--g", "p1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trimmed(r.out), "0");

  r = run({"verlinde", "--level", "2", "--genus", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trimmed(r.out), "10");
}

TEST(Cli, JsonFields) {
  auto doc = nlohmann::json::parse(run({"fusion-dim", "--level", "3", "--marked", "1,1,1,1", "--json"}).out);
  EXPECT_EQ(doc["dim"], 2);
  EXPECT_EQ(doc["method"], "paths");
  doc = nlohmann::json::parse(run({"verlinde", "--level", "3", "--marked", "1,1,1,1", "--json"}).out);
  EXPECT_EQ(doc["dim"], 2);
  EXPECT_EQ(doc["method"], "verlinde");
  doc = nlohmann::json::parse(run({"jones", "--braid", "B2 1 1 1", "--json"}).out);
  EXPECT_EQ(doc["jones"]["var"], "s");
  EXPECT_EQ(doc["jones"]["terms"], nlohmann::json::parse(R"([[2,"1"],[6,"1"],[8,"-1"]])"));
  doc = nlohmann::json::parse(run({"tqft-eval", "--algebra", "z2", "--cobordism", R"(["cap",["copants"],["pants"],"cup"])", "--json"}).out);
  EXPECT_EQ(doc["matrix"], nlohmann::json::parse(R"([["2"]])"));
}

TEST(Cli, DomainErrorsExitOne) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bracket", "--pd", "X(1,3,2,4)"},
           {"gq-check", "--f", "q1*p1", "--g", "p1", "--rep", "schrodinger"},
           {"tqft-eval", "--algebra", "z2", "--cobordism", R"(["pants","pants"])"},
       }) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 1) << args[0];
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nope"},
           {"jones", "--braid", "B2 1", "--bogus"},
           {"jones", "--braid", "B2 1", "--pd", "X(1,1,2,2)"},
           {"jones", "--pd", "X(1,2"},
           {"verlinde", "--level", "0", "--genus", "1"},
           {"fusion-dim", "--level", "2"},
       }) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0]);
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, JsonModeEmitsOneDocumentAndIsDeterministic) {
  for (const auto& args : json_corpus()) {
    const auto first = run(args);
    ASSERT_EQ(first.code, 0) << args[0] << " " << args[2] << ": " << first.err;
    EXPECT_TRUE(nlohmann::json::accept(first.out)) << args[0] << " " << args[2] << ": " << first.out;
    const auto second = run(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.err, second.err);
  }
}
