#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_support.hpp"

using coxconv::Json;
using testing_support::fixture;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + COXCONV_CLI + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return "'" + fixture(name) + "'"; }

}  // namespace

TEST(Cli, LcsCheck) {
  EXPECT_EQ(run("lcs check " + fx("a2.json")).code, 0);
  const auto a = run("lcs check " + fx("ex2a.json"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(Json::parse(a.out)["pair_kinds"]["s,t"], "affine");
  const auto b = run("lcs check " + fx("ex2b.json"));
  EXPECT_EQ(Json::parse(b.out)["pair_kinds"]["s,t"], "hyperbolic");
  const std::string bad =
      R"('{"dim":2,"S":["s","t"],"alpha":{"s":["1","0"],"t":["0","1"]},"alpha_check":{"s":["2","0"],"t":["-1","2"]}}')";
  EXPECT_EQ(run("lcs check " + bad).code, 1);
}

TEST(Cli, EveryFixtureIsValid) {
  for (const auto& e : std::filesystem::directory_iterator(COXCONV_FIXTURES)) {
    const auto j = testing_support::read_fixture(e.path().filename().string());
    if (!j.is_object()) continue;
    EXPECT_EQ(run("lcs check '" + e.path().string() + "'").code, 0) << e.path();
  }
}

TEST(Cli, ConvexityVerify) {
  EXPECT_EQ(run("convexity verify " + fx("ex2b.json") + " --vector " + fx("acheck_s.json")).code, 1);
  const auto a = run("convexity verify " + fx("ex2a.json") + " --vector " + fx("ex2a_v.json") +
                     " --orbit-budget 7 --root-budget 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(Json::parse(a.out)["truncated"], true);
  EXPECT_EQ(run("convexity verify " + fx("ex2a.json") + " --covector " + fx("ex2a_lambda.json") +
                " --orbit-budget 7 --root-budget 3")
                .code,
            0);
  EXPECT_EQ(run("convexity verify " + fx("b2.json") + " --vector '[\"1\",\"1\"]' --dual").code, 0);
}

TEST(Cli, OrbitAndBudgets) {
  const auto fin = run("orbit enumerate " + fx("b2.json") + " --vector '[\"2\",\"1\"]' --budget 100");
  EXPECT_EQ(fin.code, 0);
  EXPECT_EQ(Json::parse(fin.out)["size"], 8);
  const auto inf = run("orbit enumerate " + fx("ex2a.json") + " --vector '[\"1\",\"2\"]' --budget 9");
  EXPECT_EQ(inf.code, 2);
  EXPECT_EQ(Json::parse(inf.out)["size"], 9);
  const auto env = run("orbit enumerate " + fx("ex2a.json") + " --vector '[\"1\",\"2\"]'", "COXCONV_BUDGET=5");
  EXPECT_EQ(env.code, 2);
  EXPECT_EQ(Json::parse(env.out)["size"], 5);
  EXPECT_EQ(run("orbit enumerate " + fx("ex2a.json") + " --vector '[\"1\",\"2\"]' --budget 0").code, 64);
  EXPECT_EQ(run("orbit enumerate " + fx("ex2a.json") + " --vector '[\"1\",\"2\"]'", "COXCONV_BUDGET=x").code, 64);
}

TEST(Cli, TitsCone) {
  EXPECT_EQ(run("titscone test " + fx("a2.json") + " --vector '[\"-1\",\"4\",\"0\"]'").code, 0);
  EXPECT_EQ(run("titscone test " + fx("ex2a.json") + " --vector '[\"-1\",\"-1\"]' --cap 50").code, 2);
  // the null root is negative on -d
  EXPECT_EQ(run("titscone test " + fx("affine_a1_3.json") + " --vector '[\"0\",\"0\",\"0\",\"0\",\"-1\"]'").code, 1);
}

TEST(Cli, StabilizerAndDual) {
  const auto st = run("stabilizer " + fx("b2.json") + " --vector '[\"1\",\"1\"]'");
  EXPECT_EQ(st.code, 0);
  EXPECT_EQ(Json::parse(st.out)["order"], 2);
  EXPECT_EQ(run("stabilizer " + fx("b2.json") + " --vector '[\"-1\",\"1\"]'").code, 1);
  const auto d = run("dual " + fx("ex2a.json"));
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(Json::parse(d.out)["system"]["dim"], 1);
}

TEST(Cli, Affine) {
  EXPECT_EQ(run("affine dmin --type C2 --lc 1 --bar '{}'").code, 0);
  EXPECT_EQ(run("affine dmin --type C1 --lc 2 --bar '{\"1\":\"11/10\"}'").code, 1);
  const auto m = run("affine minimize --type A1 --lc 1 --bar '{\"1\":\"2\"}' --ld 0");
  EXPECT_EQ(m.code, 0);
  const auto j = Json::parse(m.out);
  EXPECT_EQ(j["status"], "OPTIMAL");
  EXPECT_EQ(j["min"], "-1");
  EXPECT_EQ(run("affine minimize --type B2 --lc -1 --ld 0").code, 1);
  const auto ex = run("affine example47 --m 2");
  EXPECT_EQ(ex.code, 0);
  EXPECT_NE(ex.out.find("\"-5/4\""), std::string::npos);
  const auto roots = run("affine roots --type A1 --support 2 --level-cap 1");
  EXPECT_EQ(Json::parse(roots.out)["count"], 6);
  EXPECT_EQ(run("affine dmin --type E1 --lc 1").code, 64);
  EXPECT_EQ(run("affine dmin --type A1 --lc 1/0").code, 64);
}

TEST(Cli, RootsysBuildWritesFixtureFormat) {
  const auto path = std::filesystem::temp_directory_path() / "coxconv_b3_test.json";
  EXPECT_EQ(run("rootsys build --family B --rank 3 --out '" + path.string() + "'").code, 0);
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in), testing_support::read_fixture("b3.json"));
  std::filesystem::remove(path);
  EXPECT_EQ(run("rootsys build --family E --rank 3").code, 64);
  EXPECT_EQ(run("rootsys build --family A --rank 1").code, 1);
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run("lcs check /nonexistent/system.json").code, 64);
  EXPECT_EQ(run("lcs check '{\"dim\": 2'").code, 64);
  EXPECT_EQ(run("lcs check '{\"dim\": 2}'").code, 64);
  EXPECT_EQ(run("lcs check '{\"dim\":1,\"S\":[\"s\"],\"alpha\":{\"s\":[\"1\"]},\"alpha_check\":{\"s\":[\"3\"]}}'").code,
            64);
  EXPECT_EQ(run("orbit enumerate " + fx("a2.json") + " --vector '[\"1\"]'").code, 64);
  EXPECT_EQ(run("nonsense").code, 64);
  EXPECT_EQ(run("lcs check").code, 64);
  EXPECT_EQ(run("suite bogus").code, 64);
}

TEST(Cli, HelpListsSubcommands) {
  const auto h = run("--help");
  EXPECT_EQ(h.code, 0);
  for (const char* s : {"lcs", "rootsys", "orbit", "titscone", "stabilizer", "dual", "convexity", "affine", "suite",
                        "COXCONV_BUDGET"})
    EXPECT_NE(h.out.find(s), std::string::npos) << s;
}

TEST(Cli, ExamplesSuiteIsDeterministic) {
  const auto a = run("suite examples --seed 3");
  const auto b = run("suite examples --seed 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["passed"], true);
}
