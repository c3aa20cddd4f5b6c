#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "sqstable/errors.hpp"
#include "sqstable/io.hpp"

using namespace sqstable;
using namespace testing_support;
using cli::Json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "sqstable");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(CliAnalyze, CycleTwelveFromGraph6) {
  const CliRun r = run({"analyze", "-"}, to_graph6(cycle(12)) + "\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "squarestable/1");
  EXPECT_EQ(j["invariants"]["alpha"], 6);
  EXPECT_EQ(j["invariants"]["alpha_sq"], 4);
  EXPECT_EQ(j["invariants"]["idom"], 4);
  EXPECT_EQ(j["classification"]["square_stable"], false);
}

TEST(CliAnalyze, FixtureIsPlusOne) {
  const CliRun r = run({"analyze", "--fixture", "k3_plus_e"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["classification"]["alpha_plus_class"], "PLUS_1");
  EXPECT_EQ(j["name"], "k3_plus_e");
}

TEST(CliAnalyze, EdgeListInputAndOmega) {
  const CliRun r = run({"analyze", "-", "--omega", "--square"}, "0 1\n1 2\n2 3\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["omega"]["alpha"], 2);
  EXPECT_EQ(j["omega"]["sets"].size(), 3U);
  EXPECT_EQ(j["square"]["invariants"]["alpha"], 2);
}

TEST(CliAnalyze, StreamGivesOneLinePerGraph) {
  const CliRun r = run({"analyze", "-"}, "C~\nA_\n@\n");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(Json::accept(line)) << line;
    ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(CliAnalyze, Errors) {
  EXPECT_EQ(run({"analyze", "-"}, "").code, 2);
  EXPECT_EQ(run({"analyze", "-"}, "0 0\n").code, 2);
  EXPECT_EQ(run({"analyze", "-", "--format", "graph6"}, "0 1\n").code, 2);
  EXPECT_EQ(run({"analyze", "/nonexistent/file"}).code, 2);
  const CliRun capped = run({"analyze", "-", "--cap-n", "5"}, to_graph6(cycle(12)));
  EXPECT_EQ(capped.code, 3);
  EXPECT_NE(capped.err.find("exact solver cap"), std::string::npos) << capped.err;
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliAnalyze, JsonRoundTripAndGraph6Identity) {
  const Graph g = fixture("fig_upm_not_pendant");
  const cli::AnalyzeOutput a = cli::analyze(g, SolverConfig{}, cli::AnalyzeOptions{true, true});
  const Json j = cli::to_json(a);
  const cli::AnalyzeOutput back = cli::analyze_from_json(j);
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.invariants, a.invariants);
  EXPECT_EQ(cli::to_json(back).dump(), j.dump());
  EXPECT_EQ(parse_graph6(j["graph"]["graph6"].get<std::string>()), g);
  EXPECT_THROW(cli::analyze_from_json(Json{{"schema", "other/9"}}), InputError);
}

TEST(CliGenerate, Examples) {
  const CliRun c12 = run({"generate", "cycle", "12"});
  ASSERT_EQ(c12.code, 0) << c12.err;
  EXPECT_EQ(c12.out, to_graph6(cycle(12)) + "\n");
  const CliRun corona = run({"generate", "corona", "--base", "cycle", "5"});
  ASSERT_EQ(corona.code, 0) << corona.err;
  EXPECT_EQ(parse_graph6(corona.out).order(), 10);
  const CliRun diamond = run({"generate", "named", "diamond", "--format", "edges"});
  ASSERT_EQ(diamond.code, 0) << diamond.err;
  const Graph d = parse_edge_list(diamond.out);
  EXPECT_EQ(d.order(), 4);
  EXPECT_EQ(d.size(), 5);
  EXPECT_EQ(run({"generate", "random-tree", "10", "--seed", "7"}).out,
            run({"generate", "random-tree", "10", "7"}).out);
  EXPECT_EQ(run({"generate", "cycle", "2"}).code, 2);
  const std::string four = run({"generate", "--exhaustive", "4"}).out;
  EXPECT_EQ(std::count(four.begin(), four.end(), '\n'), 1 + 1 + 2 + 6);
}

TEST(CliGenerate, ExhaustiveCountsAndFixtureList) {
  const CliRun r = run({"generate", "--exhaustive", "5", "--all-graphs"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 2 + 4 + 11 + 34);
  const CliRun list = run({"generate", "--list-fixtures"});
  EXPECT_NE(list.out.find("fig_bip_vwc_not_ss"), std::string::npos);
}

TEST(CliVerify, FixturesAndFamilies) {
  const CliRun fixtures = run({"verify", "--fixtures"});
  EXPECT_EQ(fixtures.code, 0) << fixtures.out;
  const Json j = Json::parse(fixtures.out);
  EXPECT_EQ(j["corpus"]["graphs"], 5);
  EXPECT_EQ(j["violations_total"], 0);

  const CliRun c5 = run({"verify", "--family", "cycle", "5", "--suite", "equivalences", "--details"});
  ASSERT_EQ(c5.code, 0) << c5.out;
  const Json r = Json::parse(c5.out)["equivalence_reports"][0];
  EXPECT_EQ(r["agree"], true);
  for (const auto& [label, value] : r["statements"].items()) EXPECT_EQ(value, "false") << label;
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run({"verify", "--exhaustive", "5", "--suite", "equivalences,chain,implications,trees,matroid"}).code, 0);
  // Stars are trees of girth infinity whose literal alpha-pendant clause fails.
  EXPECT_EQ(run({"verify", "--family", "star", "3", "--suite", "girth6"}).code, 1);
  EXPECT_EQ(run({"verify", "--family", "cycle", "12", "--cap-omega", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "--family", "cycle", "12", "--cap-omega", "6", "--strict"}).code, 3);
  EXPECT_EQ(run({"verify", "--suite", "bogus", "--fixtures"}).code, 2);
  EXPECT_EQ(run({"verify", "--input", "-"}, "C~\nBw\n").code, 0);
}

TEST(CliVerify, ReportsAreByteIdentical) {
  const CliRun a = run({"verify", "--exhaustive", "5", "--suite", "all"});
  const CliRun b = run({"verify", "--exhaustive", "5", "--suite", "all"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
