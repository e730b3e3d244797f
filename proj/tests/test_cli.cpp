// Runs the command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + RADIAL_CLI + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int data_rows(const std::string& csv) {
  int rows = -1;  // header
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') ++rows;
  return rows;
}

}  // namespace

TEST(Cli, EnumerateCounts) {
  auto r = run("enumerate --spec fp:3x2 --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(data_rows(r.out), 6);
  r = run("enumerate --spec fp:3x2 --n 0");
  EXPECT_EQ(data_rows(r.out), 1);
  EXPECT_NE(r.out.find("0,0,[]"), std::string::npos);
  r = run("enumerate --spec free:2 --n 3");
  EXPECT_EQ(data_rows(r.out), 36);
}

TEST(Cli, VerifyPassesAndReportsTheVerdict) {
  const auto r = run("verify --spec fp:3x2 --k 2 --n-max 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# w1_squared_verdict: plus-sign form matches; printed form does not"), std::string::npos);
}

TEST(Cli, DefectsJson) {
  const auto r = run("defects --spec fp:3x2 --k 1 --x '[[0,1]]' --y '[[1,1],[2,1]]' --n-max 8 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& row = j["tables"][0]["rows"][1];
  EXPECT_EQ(row[2], 41);
  EXPECT_EQ(row[3], 216);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("conjugacy --spec free:2 --a '[[0,1]]' --b '[[0,1]]' --mode plain --l-max 4").code, 1);
  EXPECT_EQ(run("conjugacy --spec free:2 --mode reduced --l-max 4").code, 0);
  EXPECT_EQ(run("enumerate --spec fp:1x2 --n 2").code, 2);
  EXPECT_EQ(run("enumerate --n 2").code, 2);
  EXPECT_EQ(run("enumerate --spec fp:3x2 --n 2 --format xml").code, 2);
  EXPECT_EQ(run("defects --spec fp:3x2 --x '[[9,1]]' --y e").code, 2);
  EXPECT_EQ(run("k0-check --spec fp:3x2 --k 2 --x '[[0,1]]' --y '[[1,1],[0,1]]'").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("validate --spec " RADIAL_TEST_DATA "/broken_table.json").code, 1);
  EXPECT_EQ(run("validate --spec " RADIAL_TEST_DATA "/mixed_order4.json").code, 0);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, RelativeOutputUsesTheEnvironmentDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "radial_cli_test";
  std::filesystem::remove_all(dir);
  const auto r = run("enumerate --spec fp:3x3 --n 2 --out sub/words.csv", "RADIAL_OUTPUT_DIR=" + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const auto written = slurp(dir / "sub" / "words.csv");
  EXPECT_EQ(data_rows(written), 24);
  EXPECT_EQ(written, run("enumerate --spec fp:3x3 --n 2").out);
  std::filesystem::remove_all(dir);
}
