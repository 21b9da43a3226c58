#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsgamma/cli.hpp"

namespace bsgamma {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bsgamma_test_" + name);
}

TEST(Cli, GammaExample) {
  const Result r = run({"gamma", "--n", "6", "--r", "2", "--p", "2", "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["gamma"], "7");
  EXPECT_EQ(rows[0]["agree"], true);
  EXPECT_EQ(rows[0]["witness_block"], 3);
}

TEST(Cli, LambdaFlagNormalizes) {
  const Result a = run({"gamma", "--lambda", "2,5", "--p", "3"});
  const Result b = run({"gamma", "--n", "7", "--r", "2", "--p", "3"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out)[0]["gamma"], "6");
}

TEST(Cli, VerifyIdentitiesExample) {
  const Result r = run({"verify-identities", "--p", "3", "--max-k", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) ASSERT_EQ(row["equal"], true) << row.dump();
}

TEST(Cli, VerifyOneIdentity) {
  const Result r = run({"verify-identities", "--p", "2", "--identity", "A3-into-d-parts", "--max-d", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  for (const auto& row : lines(r.out)) EXPECT_EQ(row["identity"], "into-d-parts");
  EXPECT_EQ(run({"verify-identities", "--p", "2", "--identity", "Z9"}).code, 2);
}

TEST(Cli, PrimeTooLarge) {
  const Result r = run({"gamma", "--n", "4", "--r", "2", "--p", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("PrimeTooLarge"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"gamma", "--n", "6", "--r", "2", "--p", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"gamma", "--n", "6", "--r", "2", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"gamma", "--n", "6", "--p", "2"}).code, 2);
  EXPECT_EQ(run({"gamma", "--n", "6", "--r", "2", "--p", "2", "--budget", "10"}).code, 2);
  EXPECT_EQ(run({"gamma", "--n", "6", "--r", "2", "--p", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const Result r = run({"oracle", "--n", "6", "--r", "2", "--p", "2", "--orbit-type", "3:1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BudgetExhausted) {
  const Result r = run({"oracle", "--n", "40", "--r", "20", "--p", "2", "--budget", "10000"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("InstanceTooLarge"), std::string::npos);
  EXPECT_EQ(run({"decompose", "--n", "40", "--r", "20", "--p", "2", "--route", "enumerated"}).code, 3);
}

TEST(Cli, DecomposeCheck) {
  const Result r = run({"decompose", "--n", "7", "--r", "2", "--p", "3", "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Result csv = run({"decompose", "--n", "4", "--r", "2", "--p", "2", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "route,signature,d,dim,mult,projective");
}

TEST(Cli, OracleOrbitType) {
  const Result r = run({"oracle", "--n", "4", "--r", "2", "--p", "2", "--orbit-type", "2:1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["gamma_E"], "2");
}

TEST(Cli, TensorSim) {
  const Result r = run({"tensor-sim", "--n", "6", "--r", "2", "--p", "2", "--m-max", "40", "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 40u);
  EXPECT_EQ(rows[0]["c"], "15");
  EXPECT_TRUE(rows[0]["ratio"].is_null());
  EXPECT_EQ(rows[1]["m"], 2);
}

TEST(Cli, SweepCheckAndDeterminism) {
  const std::vector<std::string> args{"sweep", "--p", "2,3", "--n-max", "10", "--check"};
  const Result a = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  const auto rows = lines(a.out);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_EQ(row["agree"], true) << row.dump();
  std::vector<std::string> single = args;
  single.insert(single.end(), {"--jobs", "1"});
  EXPECT_EQ(run(single).out, a.out);
  EXPECT_EQ(run(args).out, a.out);
}

TEST(Cli, OutFile) {
  const auto path = temp_path("out.jsonl");
  const Result r = run({"gamma", "--n", "6", "--r", "2", "--p", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(lines(text.str())[0]["gamma"], "7");
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFileAndFlagsWin) {
  const auto path = temp_path("config.ini");
  {
    std::ofstream cfg(path);
    cfg << "p=2\nn=6\nr=2\n";
  }
  const Result from_file = run({"gamma", "--config", path.string()});
  EXPECT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(lines(from_file.out)[0]["gamma"], "7");
  const Result override = run({"gamma", "--config", path.string(), "--p", "3"});
  EXPECT_EQ(override.code, 0) << override.err;
  EXPECT_EQ(lines(override.out)[0]["p"], 3);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace bsgamma
