#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string("\"") + LAGVAR_CLI_PATH + "\" " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* const kCommands[] = {"orbits", "verify-lagrangian", "drinfeld", "bivector", "wonderful-check", "schouten"};

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST(Cli, OrbitsA1) {
  const auto r = cli("orbits --algebra A1");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["result"]["rows"].size(), 2u);
  EXPECT_EQ(doc["result"]["rows"][0]["dim_orbit"], 2);
  EXPECT_EQ(doc["result"]["rows"][1]["dim_orbit"], 3);
}

TEST(Cli, OrbitsA3SingleRow) {
  const auto r = cli("orbits --algebra A3 --J 1,3");
  ASSERT_EQ(r.code, 0);
  const auto row = json::parse(r.out)["result"]["rows"][0];
  EXPECT_EQ(row["dim_orbit"], 14);
  EXPECT_EQ(row["divisors"], json::parse("[2]"));
}

TEST(Cli, CsvOutput) {
  const auto r = cli("orbits --algebra A1 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "J,dim_orbit,dim_closure,codim,divisors,dim_flag_base,dim_fiber_group,dim_stabilizer\n"
            "{},2,2,1,{1},2,0,4\n"
            "{1},3,3,0,{},0,3,3\n");
  const auto empty = cli("orbits --algebra A1 --format csv --codim 5");
  ASSERT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "J,dim_orbit,dim_closure,codim,divisors,dim_flag_base,dim_fiber_group,dim_stabilizer\n");
}

TEST(Cli, SchoutenA1) {
  const auto r = cli("schouten --algebra A1");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "ok");
  for (const auto& d : doc["result"]["doubles"]) EXPECT_TRUE(d["identity_holds"].get<bool>());
}

TEST(Cli, JsonRoundTripAndDeterminism) {
  for (const std::string cmd : kCommands) {
    const auto a = cli(cmd + " --algebra A2");
    const auto b = cli(cmd + " --algebra A2");
    ASSERT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(json::parse(a.out).dump(2) + "\n", a.out) << cmd;
  }
}

TEST(Cli, TextFormatAndOutFile) {
  const auto t = cli("wonderful-check --algebra A1 --format text");
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("status: ok"), std::string::npos);
  const std::string path = temp_path("lagvar_cli_out.json");
  const auto r = cli("drinfeld --algebra A1 --out " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), cli("drinfeld --algebra A1").out);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("orbits").code, 2);
  EXPECT_EQ(cli("frobnicate --algebra A1").code, 2);
  EXPECT_EQ(cli("orbits --algebra Q7").code, 2);
  EXPECT_EQ(cli("orbits --algebra A2 --J 5").code, 2);
  EXPECT_EQ(cli("orbits --algebra A2 --J x").code, 2);
  EXPECT_EQ(cli("orbits --algebra A2 --format xml").code, 2);
  EXPECT_EQ(cli("schouten --algebra A2 --format csv").code, 2);
  EXPECT_EQ(cli("schouten --algebra A2 --codim 1").code, 2);
  EXPECT_EQ(cli("verify-lagrangian --algebra B2 --involution bogus").code, 2);
  EXPECT_EQ(cli("verify-lagrangian --algebra A1 --subspace /nonexistent/file.json").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, InjectedFailureExitOneWithWitness) {
  const std::string path = temp_path("lagvar_cli_bad.json");
  std::ofstream(path) << "[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0]]";
  const auto r = cli("verify-lagrangian --algebra A1 --subspace " + path);
  EXPECT_EQ(r.code, 1);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "failed");
  EXPECT_EQ(doc["failure"]["witness"]["kind"], "not_isotropic");
  EXPECT_EQ(doc["failure"]["witness"]["pairing"], "4");
  std::filesystem::remove(path);
}
