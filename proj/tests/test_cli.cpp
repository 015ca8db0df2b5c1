#include "bscale/cli.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = bscale::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ScaleText) {
  const auto r = run({"--group", "2,3", "scale", "t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ScaleJson) {
  const auto r = run({"--group", "2,3", "--json", "scale", "t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse(R"({"base":2,"exponent":1,"value":"2"})"));
}

TEST(Cli, Rho) {
  EXPECT_EQ(run({"--group", "2,3", "rho", "taTTat"}).out, "0\n");
  EXPECT_EQ(run({"--group", "2,3", "rho", "t^4 a t^-2 a"}).out, "2\n");
}

TEST(Cli, Moller) {
  EXPECT_EQ(run({"--group", "2,3", "moller", "--kmax", "5", "t"}).out,
            "2 4 8 16 32 | ratio 2 | scale 2 OK\n");
}

TEST(Cli, WordCommands) {
  EXPECT_EQ(run({"--group", "2,3", "reduce", "t a^2 T"}).out, "a^3\n");
  EXPECT_EQ(run({"--group", "2,3", "reduce", "a A"}).out, "e\n");
  EXPECT_EQ(run({"--group", "2,3", "equal", "t a^2 T", "a^3"}).out, "true\n");
  EXPECT_EQ(run({"--group", "2,3", "equal", "t", "T"}).out, "false\n");
  EXPECT_EQ(run({"--group", "2,3", "modular", "t"}).out, "2/3\n");
  EXPECT_EQ(run({"--group", "2,3", "flat-rank"}).out, "1\n");
  EXPECT_EQ(run({"--group", "3,3", "kernel"}).out, "3\n");
  EXPECT_EQ(run({"--group", "2,3", "orbit", "t t"}).out, "9\n");
  EXPECT_EQ(run({"--group", "2,3", "orbit-brute", "--dmax", "10", "t t"}).out, "9\n");
  EXPECT_EQ(run({"--group", "2,3", "orbit-brute", "--dmax", "8", "t t"}).out, "none\n");
  EXPECT_EQ(run({"--group", "1,2", "matrix", "t a T"}).out, "[[1,2],[0,1]]\n");
  EXPECT_EQ(run({"--group", "2,3", "scale-set", "--rho-max", "2"}).out, "1 2 3 4 9\n");
  EXPECT_EQ(run({"--group", "2,3", "omega-dist", "16", "81"}).out, "4\n");
}

TEST(Cli, NormalFormJson) {
  const auto r = run({"--group", "2,3", "--json", "nf", "a^3 t"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["syllables"], nlohmann::json::parse("[[0,1]]"));
  EXPECT_EQ(j["tail"], "2");
  const auto b = nlohmann::json::parse(run({"--group", "1,2", "--json", "nf", "a t a"}).out);
  EXPECT_EQ(b["bs1n"]["q"], "3");
}

TEST(Cli, Trace) {
  EXPECT_EQ(run({"--group", "2,4", "trace", "--start", "2", "--h", "2", "t^4 a t^-2 a"}).out, "8\n");
  const auto r = run({"--group", "2,4", "trace", "t^-2 a t^4 a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_NE(r.err.find("notice"), std::string::npos);
  EXPECT_EQ(run({"--group", "2,3", "trace", "t t t"}).out, "8\n");
  EXPECT_EQ(run({"--group", "2,3", "trace", "t T"}).code, 3);
}

TEST(Cli, OmegaEdges) {
  const auto r = run({"--group", "2,3", "omega-edges", "--levels", "1"});
  EXPECT_EQ(r.out, "1 t 2\n1 t^-1 3\n2 t 4\n2 t^-1 3\n3 t 2\n3 t^-1 9\n");
}

TEST(Cli, BallAndDot) {
  const auto path = std::filesystem::temp_directory_path() / "bscale_cli_ball.dot";
  const auto r = run({"--group", "2,3", "ball", "--radius", "2", "--dot", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "vertices 26 edges 25 boundary 20\n");
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto g = oracle::read_dot(text.str());
  EXPECT_TRUE(g.well_formed);
  EXPECT_EQ(g.nodes.size(), 26u);
  EXPECT_EQ(g.edges.size(), 25u);
  std::filesystem::remove(path);

  const auto j = nlohmann::json::parse(run({"--group", "2,3", "--json", "ball", "--radius", "1"}).out);
  EXPECT_EQ(j["vertices"].size(), 6u);
  EXPECT_EQ(run({"--group", "2,3", "--budget", "10", "ball", "--radius", "3"}).code, 3);
}

TEST(Cli, Census) {
  EXPECT_EQ(run({"--group", "2,3", "census", "--radius", "1"}).out, "1:1 2:2 3:3 | shape OK\n");
}

TEST(Cli, Structure) {
  const auto j = nlohmann::json::parse(run({"--group", "4,6", "--json", "structure"}).out);
  EXPECT_EQ(j["primes_vplus"], nlohmann::json::parse("[2]"));
  EXPECT_EQ(j["primes_vminus"], nlohmann::json::parse("[3]"));
  EXPECT_EQ(j["quotient_order_bound"], 2);
  const auto k = nlohmann::json::parse(run({"--group", "2,3", "--json", "structure", "T"}).out);
  EXPECT_EQ(k["swap_applied"], true);
}

TEST(Cli, ExitCodes) {
  const auto parse = run({"--group", "2,3", "reduce", "t x"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_TRUE(parse.out.empty());
  EXPECT_NE(parse.err.find("offset 2"), std::string::npos);

  const auto domain = run({"--group", "0,3", "rho", "t"});
  EXPECT_EQ(domain.code, 3);
  EXPECT_TRUE(domain.out.empty());
  EXPECT_EQ(run({"--group", "2,3", "matrix", "a"}).code, 3);

  EXPECT_EQ(run({"reduce", "t"}).code, 1);
  EXPECT_EQ(run({"--group", "2,3"}).code, 1);
  EXPECT_EQ(run({"--group", "2,3", "frobnicate"}).code, 1);
  EXPECT_EQ(run({"--group", "two,3", "rho", "t"}).code, 1);
  EXPECT_EQ(run({"--group", "2,3", "ball"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SelfCheck) {
  for (const char* group : {"2,3", "2,4", "1,-2", "3,3", "-4,6"}) {
    const auto r = run({"--group", group, "selfcheck", "--seed", "5"});
    EXPECT_EQ(r.code, 0) << group << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(r.out, run({"--group", group, "selfcheck", "--seed", "5"}).out);
  }
}

TEST(Cli, ToolBinarySeparatesStreams) {
  const std::string cmd = std::string(BSCALE_TOOL_PATH) + " --group 2,4 scale T 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(out, "2\n");
}
