#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = knotgraph::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

knotgraph::cli::Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  Outcome o = run(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return knotgraph::cli::Json::parse(o.out);
}

std::string data(const std::string& name) { return std::string(KNOTGRAPH_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, BrieskornReportsGroup) {
  auto j = run_json({"brieskorn", "2", "15", "9"});
  EXPECT_EQ(j["command"], "brieskorn");
  EXPECT_EQ(j["results"]["group"], "(Z_2)^2");
  EXPECT_EQ(j["results"]["min_generators"], 2);
  EXPECT_EQ(j["verdict"], "pass");
  Outcome text = run({"brieskorn", "2", "9", "2"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("group: Z_9"), std::string::npos) << text.out;
}

TEST(Cli, TopLevelFieldOrder) {
  std::string out = run({"brieskorn", "2", "3", "5", "--json"}).out;
  auto pos = [&](const char* key) { return out.find(std::string("\"") + key + "\""); };
  EXPECT_LT(pos("command"), pos("inputs"));
  EXPECT_LT(pos("inputs"), pos("results"));
  EXPECT_LT(pos("results"), pos("provenance"));
  EXPECT_LT(pos("provenance"), pos("verdict"));
}

TEST(Cli, CertifyH2) {
  auto j = run_json({"certify", "--family", "h2", "--k", "4"});
  EXPECT_EQ(j["results"]["separation_lower"], "3");
  EXPECT_EQ(j["results"]["all_geodesic"], true);
  EXPECT_EQ(j["results"]["edges"][2]["length"], 16);
  auto odd = run_json({"certify", "--family", "h2", "--k", "3"});
  EXPECT_EQ(odd["results"]["separation_lower"], "9/4");
  EXPECT_EQ(odd["results"]["separation_integer"], 3);
}

TEST(Cli, CertifyOtherFamilies) {
  auto hn = run_json({"certify", "--family", "hn", "--n", "4", "--k", "2"});
  EXPECT_EQ(hn["results"]["separation_lower"], "3/2");
  EXPECT_EQ(hn["inputs"]["n"], 4);
  auto cc = run_json({"certify", "--family", "cc", "--k", "5"});
  EXPECT_EQ(cc["results"]["separation_lower"], "3");
  EXPECT_EQ(cc["results"]["lifts_to_knot_graph"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"certify", "--family", "h2", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"certify", "--family", "hx", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"certify", "--family", "hn", "--n", "2", "--k", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"brieskorn", "2", "15"}).code, 2);
  EXPECT_EQ(run({"brieskorn", "1", "3", "5"}).code, 2);
  Outcome mirror = run({"certify", "--family", "cc", "--k", "3", "--k11", "mirror-trefoil", "--json"});
  EXPECT_EQ(mirror.code, 1);
  auto j = knotgraph::cli::Json::parse(mirror.out);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["results"]["edges"][2]["status"], "within [3, 6], geodesic not certified");
}

TEST(Cli, ParseErrorsAreUsageErrors) {
  Outcome o = run({"invariants", "T(2,9"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("5"), std::string::npos) << o.err;
  EXPECT_EQ(run({"invariants", "T(2,4)"}).code, 2);
  EXPECT_EQ(run({"invariants", "8_20"}).code, 2);
  EXPECT_EQ(run({"dist", "--graph", "h7", "U", "T(2,3)"}).code, 2);
  EXPECT_EQ(run({"dist", "--graph", "h2", "U", "T(2,3)", "--covers", "1"}).code, 2);
  EXPECT_EQ(run({"cover", "T(2,3)", "--degree", "1"}).code, 2);
}

TEST(Cli, InvariantsAndCover) {
  auto j = run_json({"invariants", "m(T(2,3)) + 6_1"});
  EXPECT_EQ(j["results"]["normalized"], "m(T(2,3)) + 6_1");
  EXPECT_EQ(j["results"]["tau"], -1);
  EXPECT_EQ(j["results"]["covers"]["2"]["group"], "Z_3 + Z_9");
  auto w = run_json({"invariants", "Wh"});
  EXPECT_TRUE(w["results"]["covers"]["2"].is_null());
  auto c = run_json({"cover", "3*T(2,9)", "--degree", "9"});
  EXPECT_EQ(c["results"]["min_generators"], 24);
  EXPECT_EQ(c["results"]["mod_p_dimensions"]["2"], 24);
}

TEST(Cli, DistTable) {
  auto j = run_json({"dist", "--graph", "hn:4", "U", "6*T(2,9)"});
  const auto& b = j["results"]["bounds"];
  EXPECT_EQ(b["d_2"]["lower"], "6");
  EXPECT_EQ(b["d_2"]["upper"], 6);
  EXPECT_EQ(b["d_4"]["lower_integer"], 2);
  EXPECT_EQ(b["d_4"]["upper"], 2);
  EXPECT_EQ(j["results"]["path"].size(), 3u);
  auto cc = run_json({"dist", "--graph", "cc", "U", "2*Wh"});
  EXPECT_EQ(cc["results"]["bounds"]["d"]["exact"], true);
}

TEST(Cli, QuotientModels) {
  auto g4 = run_json({"quotient", "--model", "g4", "--size", "8"});
  EXPECT_EQ(g4["results"]["isometric_to_integers"], true);
  EXPECT_EQ(g4["results"]["link_of_zero"]["size"], 1);
  auto tau = run_json({"quotient", "--model", "tau", "--size", "8"});
  EXPECT_EQ(tau["results"]["link_of_zero"]["size"], 2);
  EXPECT_EQ(tau["results"]["link_of_zero"]["connected"], false);
  auto two = run_json({"quotient", "--model", "g4xu", "--size", "5"});
  EXPECT_EQ(two["results"]["points"].size(), 21u);
  EXPECT_EQ(two["results"]["intervals_match_norms"], true);
  auto nc = run_json({"quotient", "--model", "noncompat", "--size", "12"});
  EXPECT_EQ(nc["results"]["diameter"], 2);
  EXPECT_EQ(nc["results"]["subset_0123_embeds_in_line"], false);
  EXPECT_EQ(run({"quotient", "--model", "g4", "--size", "0"}).code, 2);
}

TEST(Cli, GraphFileCommands) {
  auto h = run_json({"hyperbolicity", data("cycle4.graph")});
  EXPECT_EQ(h["results"]["delta_four_point"], "1");
  auto h1 = run({"hyperbolicity", data("grid3.graph"), "--workers", "1", "--json"});
  auto h4 = run({"hyperbolicity", data("grid3.graph"), "--workers", "4", "--json"});
  EXPECT_EQ(h1.out, h4.out);
  auto l = run_json({"link", data("star.graph"), "o"});
  EXPECT_EQ(l["results"]["size"], 4);
  EXPECT_EQ(l["results"]["connected"], false);
  auto q = run_json({"qi-check", data("path9.graph"), data("path5.graph"), data("halve.map"), "--a", "2", "--b", "1",
                     "--C", "1"});
  EXPECT_EQ(q["results"]["holds"], true);
  Outcome bad = run({"qi-check", data("path9.graph"), data("path5.graph"), data("halve.map"), "--a", "1", "--b", "0",
                     "--C", "0", "--json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(knotgraph::cli::Json::parse(bad.out)["results"]["violation"]["kind"], "lower");
  EXPECT_EQ(run({"hyperbolicity", data("missing.graph")}).code, 2);
  EXPECT_EQ(run({"link", data("star.graph"), "nowhere"}).code, 2);
}

TEST(Cli, AtlasExtension) {
  auto j = run_json({"--atlas", data("extra.atlas"), "invariants", "K8 + 6_1"});
  EXPECT_EQ(j["results"]["tau"], 1);
  EXPECT_EQ(run({"invariants", "K8"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"certify", "--family", "cc", "--k", "4", "--json"},
                                        {"dist", "--graph", "h2", "2*T(2,9)", "T(2,15)", "--json"},
                                        {"quotient", "--model", "g4xu", "--size", "3", "--json"}})
    EXPECT_EQ(run(args).out, run(args).out);
}
