// Drives the rfal binary end to end and checks output and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "rfal/json_io.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + RFAL_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string theory(const std::string& name) { return std::string(RFAL_THEORIES) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rfal_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, DegreeWorkedExample) {
  const auto r = run("degree --theory " + theory("worked_lukasiewicz.rfal") + " '{p:1} => {r:1}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "9/10");
  EXPECT_NE(r.out.find("decimal: 0.9"), std::string::npos);

  const auto p = run("degree --theory " + theory("worked_product.rfal") + " '{p:1/4} => {q:1}'");
  EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "2/5");
}

TEST_F(CliTest, TrivialQueryAndRepeatingDecimal) {
  const auto r = run("degree --theory " + theory("worked_lukasiewicz.rfal") + " '{} => {}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1");

  const auto third = run("degree '{p:1/3} => {p:1}' --algebra product");
  EXPECT_NE(third.out.find("decimal: 0.(3)"), std::string::npos) << third.out;
}

TEST_F(CliTest, MalformedQueryExitsOne) {
  EXPECT_EQ(run("degree --theory " + theory("worked_lukasiewicz.rfal") + " '{p:} =>'").code, 1);
  EXPECT_EQ(run("degree --theory /nonexistent.rfal '{} => {}'").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST_F(CliTest, JsonAndTextAgree) {
  const auto j = run("degree --format json --theory " + theory("worked_lukasiewicz.rfal") + " '{p:1} => {r:1}'");
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["degree"]["num"], 9);
  EXPECT_EQ(doc["degree"]["den"], 10);
  EXPECT_EQ(doc["iterations"], 3);
  EXPECT_EQ(doc["fixpoint"], true);
  EXPECT_EQ(doc.size(), 3u);
}

TEST_F(CliTest, LowerBoundExitsTwo) {
  const std::string args = "degree --theory " + theory("worked_lukasiewicz.rfal") + " '{p:1} => {r:1}'";
  const auto r = run(args + " --max-iter 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("lower bound"), std::string::npos);
  EXPECT_EQ(run(args, "RFAL_MAX_ITER=1").code, 2);
  EXPECT_EQ(run(args, "RFAL_MAX_ITER=50").code, 0);
}

TEST_F(CliTest, ProveThenCheck) {
  const std::string proof = path("proof.json");
  const std::string th = theory("worked_lukasiewicz.rfal");
  ASSERT_EQ(run("prove --theory " + th + " '{p:1} => {r:1}' --output " + proof).code, 0);
  const auto ok = run("check-proof --theory " + th + " --proof " + proof);
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "ACCEPT {p:1} => {r:9/10}\n");

  // Tamper with a Mul scalar.
  std::ifstream in(proof);
  auto doc = nlohmann::json::parse(in);
  bool tampered = false;
  for (auto& step : doc["steps"]) {
    if (step["rule"] == "mul") {
      step["scalar"] = {{"num", 1}, {"den", 3}};
      tampered = true;
      break;
    }
  }
  ASSERT_TRUE(tampered);
  const std::string bad = path("bad.json");
  std::ofstream(bad) << doc.dump();
  const auto rej = run("check-proof --theory " + th + " --proof " + bad);
  EXPECT_EQ(rej.code, 3);
  EXPECT_NE(rej.out.find("BAD_MUL"), std::string::npos) << rej.out;

  // Same certificate against a different theory.
  EXPECT_EQ(run("check-proof --theory " + theory("worked_product.rfal") + " --proof " + proof).code, 3);
  std::ofstream(path("garbage.json")) << "{ not json";
  EXPECT_EQ(run("check-proof --theory " + th + " --proof " + path("garbage.json")).code, 1);
}

TEST_F(CliTest, ProveRefusesCappedGoedelRun) {
  const std::string th = path("chain.rfal");
  std::ofstream(th) << "algebra goedel\n{} => {p:1/3}\n{p:1/3} => {q:1}\n";
  const auto r = run("prove --algebra goedel --max-iter 1 --theory " + th + " '{} => {q:1}'");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, AlgebraOverrideChangesResult) {
  const auto r = run("degree --algebra product --theory " + theory("worked_lukasiewicz.rfal") + " '{p:1} => {r:1}'");
  EXPECT_EQ(r.code, 0);
  // product: q = 4/5, then S({q:3/5}, q:4/5) = 1, r = 9/10.
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "9/10");
  const auto g = run("degree --algebra goedel --theory " + theory("worked_lukasiewicz.rfal") + " '{p:1/2} => {r:1}'");
  EXPECT_EQ(g.code, 0);
}

TEST_F(CliTest, ClosureAndTrace) {
  const auto r = run("closure --theory " + theory("worked_lukasiewicz.rfal") + " --start '{p:1}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "{p:1, q:4/5, r:9/10}");
  const auto t = run("closure --trace --theory " + theory("worked_lukasiewicz.rfal") + " --start '{p:1}'");
  const auto doc = nlohmann::json::parse(t.out);
  EXPECT_EQ(doc["steps"].size(), 3u);
  EXPECT_EQ(doc["productive_steps"], 2);
  EXPECT_EQ(doc["steps"][0]["evaluation"]["r"]["num"], 3);
  EXPECT_EQ(doc["steps"][0]["firings"][1]["degree"]["den"], 5);
}

TEST_F(CliTest, OracleSubcommand) {
  const auto r = run("oracle --format json --theory " + theory("worked_lukasiewicz.rfal") +
                     " '{p:1} => {r:1}' --grid-k 10 --samples 200 --seed 3");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["semantic_degree"]["num"], 9);
  EXPECT_EQ(doc["agree"], true);
  EXPECT_EQ(doc["violations"], 0);

  const auto p = run("oracle --theory " + theory("worked_product.rfal") + " '{p:1/4} => {q:1}' --samples 300");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("AGREE"), std::string::npos);

  EXPECT_EQ(run("oracle --theory " + theory("worked_lukasiewicz.rfal") + " '{p:1} => {r:1}' --budget 10").code, 1);
  EXPECT_EQ(run("oracle --theory " + theory("graded.rfal") + " '{temp_high:1/5, night:1} => {complaint:1}' --fast").code, 0);
}

TEST_F(CliTest, DemoGoedel) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run("demo-goedel --k-max 10 --format json");
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 9u);
  EXPECT_EQ(doc["rows"][0]["degree"]["num"], 1);
  EXPECT_EQ(doc["rows"][0]["degree"]["den"], 4);
  EXPECT_EQ(doc["rows"][8]["degree"]["num"], 9);
  EXPECT_EQ(doc["rows"][8]["degree"]["den"], 20);
  const auto text = run("demo-goedel --k-max 3");
  EXPECT_NE(text.out.find("entails it to degree 1"), std::string::npos);
  EXPECT_EQ(run("demo-goedel --k-max 1").code, 1);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::string args = "prove --theory " + theory("graded.rfal") + " '{temp_high:1, night:1} => {complaint:1}'";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
