#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "affvir");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = affvir::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, Act) {
  Outcome r = run({"act", "--family=Omega", "--x=h[0]", "--g=s*t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t*(s*t) = s*t^2\n");
}

TEST(Cli, SimplicityAnswers) {
  Outcome theta = run({"simplicity", "--family=Theta", "--beta=1/2"});
  EXPECT_EQ(theta.code, 1);
  EXPECT_EQ(theta.out.substr(0, theta.out.find('\n')),
            "not simple; 2\xce\xb2=1 \xe2\x88\x88 Z\xe2\x82\x8a; submodule generator (t^2-1)/4");
  Outcome omega = run({"simplicity", "--family=Omega"});
  EXPECT_EQ(omega.code, 0);
}

TEST(Cli, VerifyAxioms) {
  Outcome r = run({"verify-axioms", "--family=Delta", "--window=1", "--degree=1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "pass: module axiom for Delta(L,A,B,G), window 1, degree 1: 676 checks\n");
  Outcome lie = run({"verify-axioms", "--lie", "--convention=printed", "--window=1"});
  EXPECT_EQ(lie.code, 1);
}

TEST(Cli, JsonLinesSchema) {
  Outcome r = run({"iso", "--a=Omega(2,3,1,0)", "--b=Omega(2,3,-2,0)", "--format=json"});
  EXPECT_EQ(r.code, 0);
  auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  const auto& summary = lines.back();
  EXPECT_EQ(summary["verb"], "iso");
  EXPECT_EQ(summary["status"], "pass");
  EXPECT_TRUE(summary["lines"].is_array());

  Outcome fail = run({"iso", "--a=Theta(2,3,1,0)", "--b=Theta(2,3,-2,0)", "--format=json"});
  EXPECT_EQ(fail.code, 1);
  auto fail_lines = json_lines(fail.out);
  ASSERT_GE(fail_lines.size(), 2u);
  EXPECT_TRUE(fail_lines.front().contains("record"));
  EXPECT_EQ(fail_lines.back()["status"], "fail");
}

TEST(Cli, FormatFromEnvironment) {
  ::setenv("AFFVIR_FORMAT", "json", 1);
  Outcome r = run({"act", "--family=Omega", "--x=h[0]", "--g=s*t"});
  ::unsetenv("AFFVIR_FORMAT");
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["lines"][0], "t*(s*t) = s*t^2");
}

TEST(Cli, ClassifyAndGenerate) {
  Outcome c = run({"classify", "--candidate=E0 = 3; F0 = -1/12*h0^2 - 1/6*h0 + 2/3; lambda = 1"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("Omega"), std::string::npos);
  Outcome bad = run({"classify", "--candidate=E0 = h0^3; F0 = 1; lambda = 1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("m+n = 2"), std::string::npos);
  Outcome g = run({"generate-one", "--family=Omega", "--w=t"});
  EXPECT_EQ(g.code, 0);
  Outcome lemma = run({"lemma-check", "--family=Theta", "--i=1", "--m=2", "--degree=1"});
  EXPECT_EQ(lemma.code, 0);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({"act", "--family=Omega", "--x=e[1", "--g=s"}).code, 2);
  Outcome parse = run({"act", "--family=Omega", "--x=e[1", "--g=s"});
  EXPECT_NE((parse.out + parse.err).find("column 4"), std::string::npos);
  EXPECT_EQ(run({"no-such-verb"}).code, 2);
  EXPECT_EQ(run({"act", "--family=Omega", "--set", "L=0", "--x=h[0]", "--g=1"}).code, 2);
  EXPECT_EQ(run({"simplicity", "--family=Sigma"}).code, 2);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args = {"generate-one", "--family=Delta", "--w=s*t+1", "--format=json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
