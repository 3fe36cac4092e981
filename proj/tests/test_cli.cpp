#include "parinv/json_io.hpp"
#include "parinv/generators.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef PARINV_CLI
#error "PARINV_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PARINV_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<parinv::Json> lines(const std::string& out) {
  std::vector<parinv::Json> v;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) v.push_back(parinv::Json::parse(line));
  return v;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, DescribeLineCounts) {
  const auto gl = run("describe --group gl --n 5 --parts 1,2,2");
  EXPECT_EQ(gl.status, 0);
  const auto gl_lines = lines(gl.out);
  ASSERT_EQ(gl_lines.size(), 17u);
  EXPECT_EQ(gl_lines.front()["pair"], (parinv::Json{5, 1}));
  EXPECT_EQ(gl_lines.back()["pair"], (parinv::Json{1, 5}));
  const auto sp = lines(run("describe --group sp --n 8 --parts 1,2,2,2,1").out);
  ASSERT_EQ(sp.size(), 24u);
  EXPECT_EQ(sp[19]["role"], "M0");
  EXPECT_EQ(sp[20]["kind"], "ratio");
  EXPECT_EQ(lines(run("describe --group sl --n 2 --parts 1,1").out).size(), 2u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("describe --group gl --n 5 --parts 1,2,2 --bogus").status, 2);
  EXPECT_EQ(run("describe --group gl --n 5 --parts 1,2,3").status, 2);
  EXPECT_EQ(run("describe --group xx --n 5 --parts 5").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("eval --group gl --n 5 --parts 1,2,2 --matrix /nonexistent/m.json").status, 2);
  const auto bad = write_temp("bad.json", "[[\"1\",\"x\"],[\"0\",\"1\"]]");
  EXPECT_EQ(run("eval --group gl --n 2 --parts 1,1 --matrix " + bad).status, 2);
  const auto small = write_temp("small.json", "[[\"1\",\"0\"],[\"0\",\"1\"]]");
  EXPECT_EQ(run("eval --group gl --n 3 --parts 1,2 --matrix " + small).status, 2);
  const auto not_orth = write_temp("notorth.json", "[[\"1\",\"1\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]");
  EXPECT_EQ(run("eval --group o --n 3 --parts 1,1,1 --matrix " + not_orth).status, 2);
}

TEST(Cli, EvalWitnessAndIdentity) {
  const auto witness = write_temp(
      "witness.json", parinv::to_json(parinv::nonvanishing_witness(5, {4, 4})).dump());
  const auto w = run("eval --group gl --n 5 --parts 1,2,2 --matrix " + witness);
  ASSERT_EQ(w.status, 0);
  EXPECT_EQ(lines(w.out).at(0)["values"]["(4,4)"], "1");
  const auto id = write_temp("id.json", parinv::to_json(parinv::RationalMatrix::identity(5)).dump());
  const auto i = run("eval --group gl --n 5 --parts 1,2,2 --matrix " + id);
  EXPECT_EQ(lines(i.out).at(0)["values"]["(1,5)"], "1");
  const auto o = run("eval --group o --n 5 --parts 1,3,1 --matrix " + id);
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(lines(o.out).at(0)["ratio_error"], "ratio undefined at this point");
}

TEST(Cli, VerifyExitCodesAndDeterminism) {
  const auto a = run("verify --group gl --n 4 --parts 1,3 --seed 9 --trials 20");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, run("verify --group gl --n 4 --parts 1,3 --seed 9 --trials 20").out);
  EXPECT_EQ(a.out, run("verify --group gl --n 4 --parts 1,3 --seed 9 --trials 20 --serial").out);
  const auto r = lines(a.out).at(0);
  EXPECT_EQ(r["shape"]["n"], 4);
  EXPECT_TRUE(r["duration_ms"].is_null());
  const auto m = run("verify --group gl --n 4 --parts 1,3 --seed 9 --trials 20 --mutate");
  EXPECT_EQ(m.status, 1);
  const auto report = lines(m.out).at(0);
  bool found = false;
  for (const auto& c : report["checks"])
    if (c["name"] == "invariance") {
      EXPECT_FALSE(c["pass"].get<bool>());
      EXPECT_TRUE(c.contains("counterexample"));
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "describe_out.jsonl";
  const auto r = run("describe --group gl --n 3 --parts 1,2 --out " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(lines(buf.str()).size(), 7u);
}

TEST(Cli, SampleAndOrbitDim) {
  const auto s = run("sample --group sp --n 8 --parts 1,2,2,2,1 --variant scirc --seed 3");
  ASSERT_EQ(s.status, 0);
  const auto line = lines(s.out).at(0);
  EXPECT_EQ(line["resolved_sign"], -1);
  EXPECT_EQ(line["matrix"].size(), 8u);
  EXPECT_EQ(run("sample --group gl --n 3 --parts 1,2 --variant nope").status, 2);
  const auto o = lines(run("orbit-dim --group sp --n 8 --parts 1,2,2,2,1 --seed 2").out).at(0);
  EXPECT_EQ(o["orbit_dimensions"], (parinv::Json{14, 14, 14}));
  EXPECT_EQ(o["count_identity"], true);
}
