#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(REFLAP_CLI_PATH) + " " + args + " 2>&1";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string cli() { return REFLAP_CLI_PATH; }

TEST(Cli, GenPath) {
  const CliResult r = run("gen path 4 --boundary endpoints");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("n 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("b 0 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("e 2 3\n"), std::string::npos);
}

TEST(Cli, VerifyJson) {
  const CliResult r = run("gen path 4 --boundary endpoints | " + cli() + " verify -i - --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["h_r"]["numerator"], 1);
  EXPECT_EQ(j["h_r"]["denominator"], 3);
  EXPECT_NEAR(j["lambda_r"].get<double>(), 0.5, 1e-12);
  EXPECT_TRUE(j["holds"].get<bool>());
}

TEST(Cli, DoubleAndSpectrum) {
  const CliResult d = run("gen path 4 --boundary endpoints | " + cli() + " double -i -");
  EXPECT_EQ(d.status, 0);
  EXPECT_NE(d.out.find("n 6\n"), std::string::npos);
  EXPECT_NE(d.out.find("# mirror 1 4"), std::string::npos);

  const CliResult s = run("gen cycle 6 | " + cli() + " spectrum -i - --format json");
  ASSERT_EQ(s.status, 0) << s.out;
  const auto j = nlohmann::json::parse(s.out);
  const std::vector<double> want{0, 0.5, 0.5, 1.5, 1.5, 2};
  ASSERT_EQ(j["eigenvalues"].size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_NEAR(j["eigenvalues"][k].get<double>(), want[k], 1e-12);
}

TEST(Cli, ParityCheegerSweep) {
  const std::string p4 = "gen path 4 --boundary endpoints | " + cli();
  EXPECT_EQ(run(p4 + " parity -i -").status, 0);
  const CliResult c = run(p4 + " cheeger -i - --format json --workers 2");
  ASSERT_EQ(c.status, 0) << c.out;
  EXPECT_EQ(nlohmann::json::parse(c.out)["h_r"]["denominator"], 3);
  EXPECT_EQ(run(p4 + " sweep -i -").status, 0);
  EXPECT_EQ(run(p4 + " ops -i - --format json").status, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("spectrum").status, 2);
  EXPECT_EQ(run("gen path 4 --format xml").status, 2);
  const CliResult lib = run("gen cycle 2");
  EXPECT_EQ(lib.status, 1);
  EXPECT_NE(lib.out.find("error: InvalidSpec"), std::string::npos) << lib.out;
  EXPECT_EQ(run("spectrum -i /nonexistent/graph.txt").status, 1);
  EXPECT_EQ(run("gen path 30 | " + cli() + " cheeger -i - --max-n 20").status, 1);
}

TEST(Cli, Demos) {
  const CliResult f4 = run("demo figure4");
  EXPECT_EQ(f4.status, 0);
  EXPECT_NE(f4.out.find("psi_r_axis"), std::string::npos);
  const CliResult f5 = run("demo figure5 --format json");
  ASSERT_EQ(f5.status, 0) << f5.out;
  EXPECT_NO_THROW(nlohmann::json::parse(f5.out));
}

}  // namespace
