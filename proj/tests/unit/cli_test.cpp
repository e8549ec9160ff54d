#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "fnls/report.hpp"
#include "fnls_cli/cli.hpp"

namespace fs = std::filesystem;
using fnls::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"fnls"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

// Value of `key=` in a key=value report, or empty.
std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fnls_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, HelpAndVersionSucceed) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"evolve", "--help"}).code, 0);
  const Outcome v = invoke({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(fnls::version()), std::string::npos);
}

TEST_F(CliTest, MissingSubcommandIsAValidationError) {
  const Outcome o = invoke({});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("Usage"), std::string::npos);
}

TEST_F(CliTest, UnknownFlagPrintsUsage) {
  const Outcome o = invoke({"evolve", "--bogus", "3"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("Usage: fnls evolve"), std::string::npos);
  EXPECT_EQ(invoke({"no-such-command"}).code, 1);
}

TEST_F(CliTest, InvalidValuesExitOne) {
  EXPECT_EQ(invoke({"evolve", "--alpha", "2.5", "--t-final", "0.01"}).code, 1);
  EXPECT_EQ(invoke({"evolve", "--nx", "100", "--t-final", "0.01"}).code, 1);
  EXPECT_EQ(invoke({"evolve", "--init", "triangle:a=1", "--t-final", "0.01"}).code, 1);
  EXPECT_EQ(invoke({"illposed", "--s", "0.2"}).code, 1);
  EXPECT_EQ(invoke({"verify", "--only", "9"}).code, 1);
}

TEST_F(CliTest, RuntimeFailuresExitTwo) {
  const Outcome o = invoke({"evolve", "--init", "gaussian:a=1,w=3", "--check-wraparound", "--t-final", "0.01"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("failure:"), std::string::npos);
  EXPECT_EQ(invoke({"scan-wavepacket", "--nx", "256", "--s", "0"}).code, 2);
}

TEST_F(CliTest, EvolvePlaneWaveWritesTrajectory) {
  const std::string csv = path("traj.csv");
  const Outcome o = invoke({"evolve", "--alpha", "1.5", "--gamma", "1", "--nx", "256", "--length", "6.2831853",
                            "--dt", "1e-3", "--t-final", "1", "--record-every", "250", "--init", "plane:a=0.1,k=2",
                            "--out", csv});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(value_of(o.out, "records"), "5");
  EXPECT_LE(std::stod(value_of(o.out, "mass_drift")), 1e-10);

  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind(std::string("# fnls ") + fnls::version() + "\n", 0), 0u);
  EXPECT_NE(text.find("# init=plane:a=0.1,k=2\n"), std::string::npos);
  const auto rows = data_lines(text);
  ASSERT_EQ(rows.size(), 1u + 5u * 256u);
  EXPECT_EQ(rows.front(), "t,x,re,im");

  // |u| stays a = 0.1 at every sample of a plane wave.
  for (std::size_t i = 1; i < rows.size(); i += 97) {
    std::istringstream row(rows[i]);
    std::string field;
    std::vector<double> v;
    while (std::getline(row, field, ',')) v.push_back(std::stod(field));
    ASSERT_EQ(v.size(), 4u);
    EXPECT_NEAR(std::hypot(v[2], v[3]), 0.1, 1e-12);
  }
}

TEST_F(CliTest, ConfigFileValuesYieldToFlags) {
  const std::string ini = path("run.ini");
  std::ofstream(ini) << "# comment\nalpha = 1.2\nt-final = 0.01\ninit = plane:a=0.2,k=1\n";
  const Outcome o = invoke({"--config", ini, "evolve", "--alpha", "1.8"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("# alpha=1.8\n"), std::string::npos);
  EXPECT_NE(o.out.find("# t-final=0.01\n"), std::string::npos);
  EXPECT_NE(o.out.find("# init=plane:a=0.2,k=1\n"), std::string::npos);
  EXPECT_NE(o.out.find("# config=" + ini + "\n"), std::string::npos);
}

TEST_F(CliTest, UnknownConfigKeyIsRejected) {
  const std::string ini = path("bad.ini");
  std::ofstream(ini) << "bogus = 1\n";
  EXPECT_EQ(invoke({"--config", ini, "evolve", "--t-final", "0.01"}).code, 1);
  EXPECT_EQ(invoke({"--config", path("missing.ini"), "evolve"}).code, 1);
}

TEST_F(CliTest, PicardReportsContraction) {
  const Outcome o = invoke({"picard", "--nx", "256", "--length", "20", "--dt", "1e-3", "--t-final", "0.1",
                            "--init", "gaussian:a=0.1,w=1", "--iterations", "8", "--out", path("final.csv")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_LE(std::stod(value_of(o.out, "split_step_agreement")), 1e-6);
  EXPECT_LT(std::stod(value_of(o.out, "ratio.2")), 1.0);
  EXPECT_EQ(data_lines(slurp(path("final.csv"))).size(), 257u);
}

TEST_F(CliTest, ScanTrilinearWritesScanCsv) {
  const std::string csv = path("tri.csv");
  const Outcome o =
      invoke({"scan-trilinear", "--alpha", "1.5", "--s", "0", "--b", "0.51", "--n", "16,32,64,128,256", "--out", csv});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string text = slurp(csv);
  EXPECT_NE(text.find("# n=16,32,64,128,256\n"), std::string::npos);
  const auto rows = data_lines(text);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows.front(), "parameter,value,aux1,aux2");
  EXPECT_NEAR(std::stod(value_of(o.out, "ratio.slope")), 0.25, 0.15);
}

TEST_F(CliTest, ScanRemainderIsDeterministic) {
  const std::string a = path("a.csv"), b = path("b.csv");
  ASSERT_EQ(invoke({"scan-remainder", "--alpha", "1.2", "--out", a}).code, 0);
  ASSERT_EQ(invoke({"scan-remainder", "--alpha", "1.2", "--out", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(data_lines(slurp(a)).size(), 8u);
}

TEST_F(CliTest, ScanWavepacketWritesOneFilePerRegularity) {
  const Outcome o = invoke({"scan-wavepacket", "--s", "-0.25,0.25", "--m", "16,32,64,128", "--out", path("wp.csv")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(fs::exists(path("wp_s-0.25.csv")));
  EXPECT_TRUE(fs::exists(path("wp_s0.25.csv")));
}

TEST_F(CliTest, VerifySingleGate) {
  const Outcome o = invoke({"verify", "--only", "1", "--out", path("verify.txt")});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("PASS [1]"), std::string::npos);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(slurp(path("verify.txt")).rfind("# fnls ", 0), 0u);
}
