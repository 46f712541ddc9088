#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LINEDEGEN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, Count) {
  EXPECT_EQ(run("count --n 3 --d 3 --quiet").out, "27\n");
  EXPECT_EQ(run("count --n 4 --d 5 --quiet").out, "2875\n");
  const CliRun r = run("count --n 5 --d 7 --quiet");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "698005\n");
}

TEST(Cli, Split) {
  const CliRun r = run("split --n 4 --d 5 --k 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("1600 | 1275 | 2875 | ok"), std::string::npos);
}

TEST(Cli, JsonEnvelope) {
  const CliRun r = run("split --n 5 --d 7 --k 5 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("command"), "split");
  EXPECT_EQ(j.at("status"), "ok");
  EXPECT_EQ(j.at("results").at(0).at("counts").at("k_lines"), "398125");
  EXPECT_EQ(j.at("results").at(0).at("counts").at("l_lines"), "299880");
}

TEST(Cli, ByteIdenticalOutput) {
  EXPECT_EQ(run("verify thm33 --max-sum 6 --json").out, run("verify thm33 --max-sum 6 --json").out);
  EXPECT_EQ(run("split --n 4 --d 5 --k 3").out, run("split --n 4 --d 5 --k 3").out);
}

TEST(Cli, VerifySweeps) {
  EXPECT_EQ(run("verify thm33 --max-sum 10").exit_code, 0);
  EXPECT_EQ(run("verify prop311 --max-k 6 --max-l 6").exit_code, 0);
  EXPECT_EQ(run("verify lemma37 --max-l 9").exit_code, 0);
}

TEST(Cli, NormalTypesAndWitness) {
  EXPECT_EQ(run("normal-types --n 4 --k 5 --quiet").out, "(-1, -1)\n");
  const CliRun w = run("witness --n 4 --d 5 --k 4");
  EXPECT_EQ(w.exit_code, 0);
  EXPECT_NE(w.out.find("all checks pass"), std::string::npos);
}

TEST(Cli, ArgumentErrorsExitTwo) {
  EXPECT_EQ(run("witness --n 3 --d 4 --k 2").exit_code, 2);
  EXPECT_EQ(run("count --n 3").exit_code, 2);
  EXPECT_EQ(run("verify nonsense --max-l 3").exit_code, 2);
  EXPECT_EQ(run("verify thm33").exit_code, 2);
  EXPECT_EQ(run("split --n 3 --d 3 --k 3").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("count --n abc --d 3").exit_code, 2);
}
