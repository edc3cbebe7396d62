#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only unless the command redirects stderr itself.
Run run(const std::string& args) {
  const std::string cmd = std::string(CHESSIDEAL_CLI) + " " + args;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string sample(const std::string& name) { return std::string(CHESSIDEAL_SAMPLE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST(CliIdeal, GeneratorCounts) {
  auto r = run("ideal --m 3 --n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 2u + 6u);
  EXPECT_EQ(r.out.rfind("vars 9\n", 0), 0u);
  EXPECT_EQ(line_count(run("ideal --m 2 --n 2 --power 2").out), 2u + 3u);
  EXPECT_EQ(line_count(run("ideal --m 1 --n 4 --kind stanley-reisner").out), 2u + 6u);
  EXPECT_EQ(line_count(run("ideal --fixture six-quadrics").out), 2u + 9u);
}

TEST(CliIdeal, BoundsAreUsageErrors) {
  EXPECT_EQ(run("ideal --m 3 --n 2 2>/dev/null").code, 1);
  EXPECT_EQ(run("ideal --m 2 --n 7 2>/dev/null").code, 1);
  EXPECT_EQ(run("ideal --m 2 --n 2 --power 5 2>/dev/null").code, 1);
  EXPECT_EQ(run("ideal --m 2 --n 2 --kind banana 2>/dev/null").code, 1);
  EXPECT_EQ(run("ideal --fixture two-n-minus-5 --n 3 2>/dev/null").code, 1);
}

TEST(CliPrimes, FormulaAndBruteForceAgree) {
  auto r = run("primes --m 2 --n 3 --method both 2>/dev/null");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 5u);
  auto one = run("primes --m 1 --n 4 2>/dev/null");
  EXPECT_EQ(one.out, "x[1,1] x[1,2] x[1,3] x[1,4]\n");
  auto three = run("primes --m 3 --n 3 --method both 2>&1 >/dev/null");
  EXPECT_NE(three.out.find("count 15"), std::string::npos) << three.out;
  EXPECT_NE(three.out.find("bight 4"), std::string::npos) << three.out;
}

TEST(CliInvariants, ThreeByThree) {
  auto r = run("invariants --m 3 --n 3");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reg"], 4);
  EXPECT_EQ(j["depth"], 4);
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["height"], 3);
  EXPECT_EQ(j["bight"], 4);
  EXPECT_EQ(j["a_invariant"], 0);
  EXPECT_EQ(j["cross_field"], 2);
  EXPECT_EQ(j["torsion_warning"], false);
  EXPECT_EQ(j["input"]["m"], 3);
}

TEST(CliInvariants, TwoRowPowers) {
  auto p4 = nlohmann::json::parse(run("invariants --m 2 --n 3 --power 4").out);
  EXPECT_EQ(p4["depth"], 1);
  auto p2 = nlohmann::json::parse(run("invariants --m 2 --n 4 --power 2").out);
  EXPECT_EQ(p2["depth"], 2);
  EXPECT_EQ(p2["reg"], 4);
}

TEST(CliInvariants, FileAmbientAndCharacteristic) {
  auto path = temp_file("edge.txt", "vars 2\n1 1\n");
  auto j = nlohmann::json::parse(run("invariants --file " + path + " --ambient 5 --char 101 --cross-char 0").out);
  EXPECT_EQ(j["depth"], 4);
  EXPECT_EQ(j["field"], 101);
  EXPECT_TRUE(j["cross_field"].is_null());
  EXPECT_EQ(j["input"]["file"], path);
  EXPECT_EQ(run("invariants --file " + path + " --char 4 2>/dev/null").code, 1);
  EXPECT_EQ(run("invariants --file " + path + " --ambient 1 2>/dev/null").code, 1);
}

TEST(CliGuard, LargeSweepsNeedAllowLong) {
  EXPECT_EQ(run("invariants --m 2 --n 4 --power 3 2>/dev/null").code, 3);
  EXPECT_EQ(run("invariants --m 4 --n 4 --kind stanley-reisner 2>/dev/null").code, 3);
  EXPECT_EQ(run("invariants --m 2 --n 2 --power 4").code, 0);
}

TEST(CliBetti, FixtureRegularities) {
  auto six = run("betti " + sample("six_quadrics.txt"));
  EXPECT_EQ(six.code, 0);
  EXPECT_NE(six.out.find("reg 3 "), std::string::npos) << six.out;
  EXPECT_NE(six.out.find("hochster check agrees"), std::string::npos);
  auto l3 = nlohmann::json::parse(run("betti --json " + sample("two_n_minus_3_n4.txt")).out);
  EXPECT_EQ(l3["reg"], 5);
  EXPECT_EQ(l3["hochster_check"], true);
  auto l5 = nlohmann::json::parse(run("betti --json " + sample("two_n_minus_5_n4.txt")).out);
  EXPECT_EQ(l5["reg"], 3);
}

TEST(CliBetti, ReadsStandardInput) {
  auto r = run("ideal --m 2 --n 2 | " + std::string(CHESSIDEAL_CLI) + " betti --json -");
  // the pipe's exit code is the last command's
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entries"], nlohmann::json::parse("[[0,2,2],[1,4,1]]"));
}

TEST(CliBetti, BadInputIsAUsageError) {
  EXPECT_EQ(run("betti /nonexistent/file 2>/dev/null").code, 1);
  auto bad = temp_file("bad.txt", "vars 2\n1 2 3\n");
  auto r = run("betti " + bad + " 2>&1");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
  auto zero = temp_file("zero.txt", "vars 2\n");
  EXPECT_EQ(run("betti " + zero + " 2>/dev/null").code, 1);
}

TEST(CliMatching, ThreeByThree) {
  auto r = run("matching --m 3 --n 3 --k-max 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("value 4\n", 0), 0u) << r.out;
  EXPECT_EQ(line_count(r.out), 3u);
}

TEST(CliVerify, DefaultSuitePasses) {
  auto r = run("verify --suite paper");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
  EXPECT_NE(r.out.find("SKIPPED-LONG"), std::string::npos);
}

TEST(CliVerify, JsonListsEveryCase) {
  auto r = run("verify --suite paper --json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_GT(j.size(), 10u);
  for (const auto& c : j) {
    EXPECT_TRUE(c.contains("expected"));
    EXPECT_TRUE(c["status"] == "PASS" || c["status"] == "SKIPPED-LONG") << c.dump();
  }
}

TEST(CliUsage, ExitCodes) {
  EXPECT_EQ(run("--help >/dev/null").code, 0);
  EXPECT_EQ(run("2>/dev/null").code, 1);
  EXPECT_EQ(run("frobnicate 2>/dev/null").code, 1);
  EXPECT_EQ(run("verify --suite nonsense 2>/dev/null").code, 1);
}
