#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = boolift::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, ComposeOneWay) {
  const auto j = run_json({"compose", "--spec", "omb:5", "--gadget", "and", "--measures", "oneway"});
  EXPECT_EQ(j["command"], "compose");
  EXPECT_EQ(j["results"]["oneway"], 3);
  EXPECT_TRUE(j.contains("inputs"));
  EXPECT_TRUE(j["warnings"].is_array());
}

TEST(Cli, AnalyzeSparsity) {
  EXPECT_EQ(run_json({"analyze", "--spec", "addr:4", "--measures", "spar"})["results"]["spar"], 9);
  const auto j = run_json({"analyze", "--spec", "sym:0101"});
  EXPECT_EQ(j["results"]["fourierpm"], 1);
  EXPECT_EQ(j["results"]["switch"], 2);
  EXPECT_EQ(j["results"]["alt"], 3);
  const auto nonsym = run_json({"analyze", "--spec", "addr:2", "--measures", "switch"});
  EXPECT_EQ(nonsym["warnings"].size(), 1u);
}

TEST(Cli, AnalyzeSpectrum) {
  const auto j = run_json({"analyze", "--spec", "maj:3", "--measures", "spectrum"});
  EXPECT_EQ(j["results"]["spectrum"], json::parse(R"([["3",1],["5",1],["6",1],["7",-2]])"));
}

TEST(Cli, EvalAndPartialDomain) {
  const auto j = run_json({"eval", "--spec", "table:e8:3", "--x", "3", "--x", "0x4"});
  EXPECT_EQ(j["results"]["values"]["3"], 1);
  EXPECT_EQ(j["results"]["values"]["0x4"], 0);
  const auto p = run_json({"eval", "--spec", "ombp:3", "--x", "7"});
  EXPECT_TRUE(p["results"]["values"]["7"].is_null());
  EXPECT_EQ(run_json({"eval", "--spec", "maj:3"})["results"]["serialized"], "n=3;tt=e8");
}

TEST(Cli, CsvUsesDottedKeys) {
  const auto r = run({"compose", "--spec", "ombp:3", "--gadget", "ip:2", "--measures", "oneway,audit", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("key,value\n", 0), 0u);
  EXPECT_NE(r.out.find("oneway,4\n"), std::string::npos);
  EXPECT_NE(r.out.find("audit.colors,13\n"), std::string::npos);
}

TEST(Cli, Query) {
  EXPECT_EQ(run_json({"query", "--spec", "omb:4", "--model", "naadt"})["results"]["k"], 4);
  EXPECT_EQ(run_json({"query", "--spec", "xor:4", "--model", "napdt"})["results"]["k"], 1);
  EXPECT_EQ(run_json({"query", "--spec", "ombp:4", "--model", "ddt"})["results"]["k"], 3);
}

TEST(Cli, SymmetricNaadtIsSeeded) {
  const auto a = run({"symmetric-naadt", "--spec", "thr:9:10", "--check", "--family", "--seed", "4"});
  const auto b = run({"--seed", "4", "symmetric-naadt", "--spec", "thr:9:10", "--check", "--family"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["results"]["agrees"], true);
  const auto fallback = run_json({"symmetric-naadt", "--spec", "maj:8"});
  EXPECT_EQ(fallback["results"]["queries"], 8);
  EXPECT_FALSE(fallback["warnings"].empty());
}

TEST(Cli, Families) {
  const auto j = run_json({"families", "--q", "3", "--n", "9", "--d", "3", "--measures", "size,agr,intersecting,packing"});
  EXPECT_EQ(j["results"]["size"], "891");
  EXPECT_EQ(j["results"]["intersecting"], true);
  EXPECT_EQ(j["results"]["packing"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"analyze", "--spec", "omb:x"}).code, 2);
  EXPECT_EQ(run({"analyze", "--spec", "omb:4", "--measures", "nope"}).code, 2);
  EXPECT_EQ(run({"query", "--spec", "omb:4", "--model", "adaptive"}).code, 2);
  EXPECT_EQ(run({"compose", "--spec", "omb:20", "--gadget", "ip:3"}).code, 3);
  EXPECT_EQ(run({"compose", "--spec", "omb:8", "--cap-cells", "100"}).code, 3);
  const auto r = run({"analyze", "--spec", "omb:x"});
  EXPECT_NE(r.err.find("position 4"), std::string::npos);
}

TEST(Cli, VerifyFast) {
  const auto r = run({"verify", "--suite", "paper", "--level", "fast"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["results"]["failed"], 0);
  EXPECT_EQ(j["results"]["c01"]["passed"], true);
  EXPECT_EQ(j["results"]["c12"]["passed"], true);
}
