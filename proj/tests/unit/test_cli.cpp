#include <gtest/gtest.h>

#include <sstream>

#include "ellgal/group_label.hpp"
#include "ellgal_cli/cli.hpp"
#include "json.hpp"

using ellgal::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = run(args, out, err, env);
  return {code, out.str(), err.str()};
}

json structured(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.push_back("--format");
  args.push_back("structured");
  const Result r = call(args, env);
  json j = json::parse(r.out);
  j["_code"] = r.code;
  return j;
}

}  // namespace

TEST(Cli, GaloisCheck) {
  json z6 = structured({"galois-check", "Z6"});
  EXPECT_EQ(z6["_code"], 0);
  EXPECT_EQ(z6["status"], "pass");
  EXPECT_EQ(z6["payload"]["admissible"], true);
  json z5 = structured({"galois-check", "Z5"});
  EXPECT_EQ(z5["_code"], 1);
  EXPECT_EQ(z5["payload"]["reason"], "|G_0| = 1");
  json z2 = structured({"galois-check", "Z2"});
  EXPECT_EQ(z2["payload"]["reason"], "|G| >= 3 fails");
}

TEST(Cli, VerifyPaperSingleExample) {
  json r = structured({"verify-paper", "--example", "18"});
  EXPECT_EQ(r["_code"], 0);
  EXPECT_EQ(r["status"], "pass");
  EXPECT_EQ(r["payload"]["degree"], "9");
  EXPECT_EQ(r["payload"]["label"], "Abelian(3,3)");
  EXPECT_EQ(r["version"], ellgal::cli::kFormatVersion);
}

TEST(Cli, HumanModeCarriesTheSameStatusLine) {
  const Result r = call({"galois-check", "Z6"});
  EXPECT_EQ(r.out.rfind("status: pass\n", 0), 0u);
  const Result f = call({"galois-check", "Z5"});
  EXPECT_EQ(f.out.rfind("status: fail\n", 0), 0u);
}

TEST(Cli, ClassifyAndRealize) {
  json c = structured({"classify", "--lattice", "hex", "2:0:0", "(0, 2/7, 1/7)"});
  EXPECT_EQ(c["_code"], 0);
  EXPECT_EQ(c["payload"]["label"], "Exc1(7,3)");
  EXPECT_EQ(c["payload"]["order"], 21);
  json r = structured({"realize", "BD(2,4)"});
  EXPECT_EQ(r["_code"], 0);
  EXPECT_EQ(r["payload"]["matches"], true);
  json bad = structured({"realize", "E(5,3)"});
  EXPECT_EQ(bad["_code"], 1);
}

TEST(Cli, EnumerateAndCensus) {
  json e = structured({"enumerate", "--lattice", "square", "--torsion", "1"});
  EXPECT_EQ(e["_code"], 0);
  EXPECT_EQ(e["payload"]["subgroups"], 3);
  json c = structured({"census-check", "--lattice", "hex", "--torsion", "3"});
  EXPECT_EQ(c["_code"], 0);
  EXPECT_EQ(c["payload"]["passed"], true);
  json cap = structured({"enumerate", "--lattice", "square", "--torsion", "40"});
  EXPECT_EQ(cap["_code"], 3);
  json small = structured({"enumerate", "--lattice", "square", "--torsion", "3", "--cap", "10"});
  EXPECT_EQ(small["_code"], 3);
}

TEST(Cli, DegreeAndSeedPrecedence) {
  json d = structured({"degree", "--field", "e3", "--curve", "x^3 + 1", "--function", "-y(y^2 - 9)/(y^2 - 1)"});
  EXPECT_EQ(d["_code"], 0);
  EXPECT_EQ(d["payload"]["degree"], 9);
  json env = structured({"degree", "--curve", "x^3 + x", "x^2"}, "17");
  EXPECT_EQ(env["payload"]["seed"], 17);
  json flag = structured({"degree", "--seed", "5", "--curve", "x^3 + x", "x^2"}, "17");
  EXPECT_EQ(flag["payload"]["seed"], 5);
  json bad_env = structured({"degree", "--curve", "x^3 + x", "x^2"}, "nope");
  EXPECT_EQ(bad_env["_code"], 2);
  json constant = structured({"degree", "--curve", "x^3 + x", "7"});
  EXPECT_EQ(constant["_code"], 2);
}

TEST(Cli, UsageErrorsNeverCrash) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"galois-check", "Z(2"}).code, 2);
  EXPECT_EQ(call({"galois-check"}).code, 2);
  EXPECT_EQ(call({"classify", "--lattice", "cubic", "0:0:0"}).code, 2);
  EXPECT_EQ(call({"classify", "1:x:0"}).code, 2);
  EXPECT_EQ(call({"degree", "--curve", "x^2", "x"}).code, 2);
  EXPECT_EQ(call({"degree", "--curve", "x^3", "x"}).code, 1);
  EXPECT_EQ(call({"verify-paper", "--example", "3"}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "galois-check", "Z6"}).code, 2);
  json j = structured({"galois-check", "Zq"});
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["payload"]["position"], 1);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(call({"verify-paper", "--example", "17"}).out, call({"verify-paper", "--example", "17"}).out);
}

TEST(Cli, LabelPrintParseRoundTrip) {
  for (const char* text : {"Z2^3", "E(5,13,4)", "D3", "BD(2,4)", "Z2xZ4", "E(7,3)"}) {
    const auto label = ellgal::parse_group_label(text);
    EXPECT_EQ(ellgal::parse_group_label(label.to_string()), label);
  }
}
