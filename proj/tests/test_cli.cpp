#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(GL4_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  CliRun r = run(args);
  EXPECT_EQ(r.code, expect_code) << args;
  return json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = testing::TempDir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

void expect_schema(const json& j) {
  EXPECT_EQ(j.at("schema_version"), 1);
  for (const char* k : {"inputs", "samples", "values", "err_est", "rel_err", "pass", "runtime_ms"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_TRUE(j["samples"].is_array());
}

}  // namespace

TEST(Cli, GammaValues) {
  json a = run_json("gamma --kind R --s 2");
  expect_schema(a);
  EXPECT_EQ(a["values"]["results"][0]["text"], "0.3183098862");
  json b = run_json("gamma --kind C --s 1");
  EXPECT_EQ(b["values"]["results"][0]["text"], "0.3183098862");
  json c = run_json("gamma --kind poch --s 0.5 --n 3");
  EXPECT_NEAR(c["values"]["results"][0]["value"][0].get<double>(), 0.5 * 1.5 * 2.5, 1e-13);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("gamma --kind R --s 1+").code, 2);
  EXPECT_EQ(run("gamma --kind R --s abc").code, 2);
  EXPECT_EQ(run("gamma --kind Q --s 1").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("rep --lambda 1,2,0").code, 2);
  EXPECT_EQ(run("bf --case 7x").code, 2);
  EXPECT_EQ(run("kernel --family P1111 --nu 0.1,0.2,0.3,0.4 --index e1").code, 2);
  EXPECT_EQ(run("kernel --nu 0.1").code, 2);
  EXPECT_EQ(run("--format yaml gamma --s 1").code, 2);
}

TEST(Cli, Rep) {
  json a = run_json("rep --lambda 2,1,0");
  expect_schema(a);
  EXPECT_EQ(a["values"]["dim"], 16);
  EXPECT_TRUE(a["pass"].get<bool>());
  EXPECT_EQ(run_json("rep --lambda 0,0,1")["values"]["dim"], 1);
}

TEST(Cli, IdentitiesCorpus) {
  json a = run_json("identities --suite corpus --samples 1 --name Um_recursion_m2");
  expect_schema(a);
  EXPECT_TRUE(a["pass"].get<bool>());
  ASSERT_EQ(a["samples"].size(), 1u);
  std::string empty = write_temp("empty.json", R"({"schema_version": 1, "identities": []})");
  json e = run_json("identities --suite corpus --corpus " + empty);
  EXPECT_TRUE(e["pass"].get<bool>());
  EXPECT_EQ(e["warnings"].size(), 1u);
}

TEST(Cli, InjectedFalseIdentity) {
  std::string bad = write_temp("false.json", R"({"schema_version": 1, "identities": [
    {"name": "false_barnes", "tol": 1e-8,
     "vars": [{"name": "a", "re": [0.5, 1.0]}, {"name": "b", "re": [0.5, 1.0]}],
     "lhs": [{"coef": "1", "gammas": [["R", "a+b"]]}],
     "rhs": [{"coef": "1.001", "gammas": [["R", "a+b"]]}]}]})");
  CliRun r = run("identities --suite corpus --corpus " + bad);
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Cli, BarnesAndSaalschutzSuites) {
  json a = run_json("identities --suite barnes --samples 2");
  EXPECT_TRUE(a["pass"].get<bool>());
  EXPECT_EQ(a["samples"].size(), 4u);
  EXPECT_TRUE(run_json("identities --suite saalschutz --samples 3")["pass"].get<bool>());
}

TEST(Cli, BumpFriedberg) {
  CliRun a = run("bf --case 3a --kappa 4,2 --seed 7");
  ASSERT_EQ(a.code, 0);
  json j = json::parse(a.out);
  expect_schema(j);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["samples"].size(), 2u);
  EXPECT_EQ(run("bf --case 3a --kappa 4,2 --seed 7").out, a.out);
  EXPECT_NE(run("bf --case 3a --kappa 4,2 --seed 8").out, a.out);
  EXPECT_EQ(run("bf --case 2a --nu-perturbation 0.01").code, 1);
  EXPECT_EQ(run("bf --case 3a --kappa 5,2").code, 2);
  json c = run_json("bf --case 1d --contragredient --samples 1");
  EXPECT_TRUE(c["pass"].get<bool>());
}

TEST(Cli, LFactor) {
  json a = run_json("lfactor --family P22 --kappa 4,2 --nu 0,0 --s 1.5");
  expect_schema(a);
  EXPECT_EQ(a["values"]["standard"]["symbolic"], "Gamma_C(s+1.5) Gamma_C(s+0.5)");
  EXPECT_EQ(a["values"]["numeric"].size(), 1u);
}

TEST(Cli, KernelChecksAndSigmaFile) {
  std::string sf = write_temp("sigma.txt", "family = P22\nnu = 0.08+0.01i, -0.05\n# weights\nkappa = 2,2\n");
  json a = run_json("kernel --sigma-file " + sf + " --index all --check ds");
  expect_schema(a);
  EXPECT_TRUE(a["pass"].get<bool>());
  EXPECT_EQ(a["inputs"]["sigma"]["lambda"], "(2,2,0)");
  json b = run_json("kernel --sigma-file " + sf + " --check special --s 2.1,2.3,0");
  EXPECT_TRUE(b["pass"].get<bool>());
  json c = run_json("kernel --family P1111 --nu 0.1,0.2,0.3,0.4 --s 2,2,3 --s 2.5,2,3.1");
  EXPECT_EQ(c["values"]["kernels"].size(), 2u);
  EXPECT_FALSE(c.contains("warnings"));
}

TEST(Cli, PdeAndConfig) {
  std::string cfg = write_temp("run.cfg", "# quadrature\nstep = 0.25\nheight = 40\nseed = 3\n");
  json a = run_json("--config " + cfg + " pde --family P211 --nu 0.09,-0.06,0.12 --kappa 2 --delta 1,0 --samples 1");
  expect_schema(a);
  EXPECT_TRUE(a["pass"].get<bool>());
  EXPECT_EQ(a["inputs"]["config"]["seed"], 3);
  EXPECT_EQ(run("pde --family P211 --nu 0.09,-0.06,0.12 --kappa 2 --delta 1,0 --samples 1 --gamma-shift 0.1").code, 1);
  std::string bad = write_temp("bad.cfg", "stepp = 1\n");
  EXPECT_EQ(run("--config " + bad + " gamma --s 1").code, 2);
  std::string neg = write_temp("neg.cfg", "tol1 = -1\n");
  EXPECT_EQ(run("--config " + neg + " gamma --s 1").code, 2);
}

TEST(Cli, CsvAndText) {
  CliRun a = run("bf --case 1b --samples 2 --format csv");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("case,index,point,", 0), 0u);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 3);
  CliRun b = run("rep --lambda 1,0,0 --format text");
  EXPECT_NE(b.out.find("dim = 4"), std::string::npos);
  EXPECT_NE(b.out.find("PASS"), std::string::npos);
}

TEST(Cli, TimingFlag) {
  EXPECT_EQ(run_json("gamma --s 1")["runtime_ms"], 0.0);
  EXPECT_GE(run_json("--timing gamma --s 1")["runtime_ms"].get<double>(), 0.0);
}
