#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(SWARMLOC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, ListsVariants) {
  const Result r = cli("variants");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 40);
  EXPECT_NE(r.out.find("MPSO11,W11,A2"), std::string::npos);
}

TEST(Cli, DeployIsSeedDeterministic) {
  const Result a = cli("deploy --n-sus 5 --seed 3");
  const Result b = cli("deploy --n-sus 5 --seed 3");
  const Result c = cli("deploy --n-sus 5 --seed 4");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(a.out.rfind("role,index,x,y\n", 0), 0u);
}

TEST(Cli, RunPrintsTrace) {
  const Result r = cli("run --n-sus 20 --iterations 15");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("t,gbest_fitness,x,y\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
}

TEST(Cli, McWritesOutputs) {
  const fs::path dir = fs::temp_directory_path() / "swarmloc_cli_mc";
  fs::remove_all(dir);
  const Result r = cli("mc --trials 3 --n-sus 10 --iterations 10 --variants PSO,MPSO11 --out " + dir.string());
  EXPECT_EQ(r.status, 0);
  for (const char* f : {"convergence.csv", "mse_vs_iteration.csv", "cdf.csv", "summary.csv", "decisions.jsonl",
                        "metadata.json", "timings.json"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  EXPECT_NE(slurp(dir / "convergence.csv").find("MPSO11,"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("mc --variants NOPE --trials 1").status, 2);
  EXPECT_EQ(cli("mc --set colour=red --trials 1").status, 2);
  EXPECT_EQ(cli("mc --n-sus 0 --trials 1").status, 2);
  EXPECT_EQ(cli("sweep --iterations 10 --set checkpoints=11 --trials 1").status, 2);
  EXPECT_EQ(cli("mc --config /nonexistent/x.conf").status, 4);
  EXPECT_EQ(cli("mc --trials 1 --n-sus 5 --iterations 2 --out /proc/forbidden").status, 4);
  EXPECT_NE(cli("").status, 0);
}

}  // namespace
