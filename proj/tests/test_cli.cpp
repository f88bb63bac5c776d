#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "barnopt/cli.hpp"
#include "barnopt/io.hpp"

namespace barn::cli {
namespace {

using io::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, OptimizeVolumeJson) {
  const Result r = run_cli({"--format", "json", "optimize-volume", "--volume", "300", "--alpha", "30"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["S_min"].get<double>(), 238.7161, 5e-4);
  EXPECT_LE(std::abs(j["alpha_rad"].get<double>() - std::numbers::pi / 6), 1e-12);
  // Serialized doubles round-trip exactly.
  EXPECT_EQ(io::to_body(j), r.out);
}

TEST(Cli, TextAndCsv) {
  const Result text = run_cli({"optimize-floor", "--floor", "100", "--height", "3", "--alpha", "30"});
  ASSERT_EQ(text.code, kExitOk) << text.err;
  EXPECT_NE(text.out.find("7.60"), std::string::npos);
  const Result csv = run_cli({"--format", "csv", "assess", "--width", "19.9", "--length", "15.75",
                              "--height", "5", "--alpha", "35"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_GE(std::count(csv.out.begin(), csv.out.end(), '\n'), 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"optimize-volume", "--volume", "-1", "--alpha", "30"}).code, kExitInvalid);
  const Result domain = run_cli({"optimize-volume", "--volume", "300", "--alpha", "89.9"});
  EXPECT_EQ(domain.code, kExitInvalid);
  EXPECT_NE(domain.err.find("--alpha"), std::string::npos) << domain.err;
  EXPECT_EQ(run_cli({"optimize-volume", "--volume", "abc", "--alpha", "30"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"optimize-volume", "--alpha", "30"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"no-such-command"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"--format", "xml", "optimize-volume", "--volume", "1", "--alpha", "30"}).code,
            kExitInvalid);
  EXPECT_EQ(run_cli({"audit", "/nonexistent/houses.csv"}).code, kExitFailure);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, Audit) {
  const auto path = temp_file("barnopt_cli_audit.csv",
                              "name,W,L,H,alpha_deg\nHouse A,19.9,15.75,5,35\nBad,1,x,1,30\n");
  const Result r = run_cli({"--format", "json", "audit", path.string()});
  EXPECT_EQ(r.code, kExitInvalid);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["errors"].size(), 1u);

  const auto empty = temp_file("barnopt_cli_empty.csv", "");
  EXPECT_EQ(run_cli({"audit", empty.string()}).code, kExitInvalid);
}

TEST(Cli, Contours) {
  const Result r = run_cli({"--format", "json", "contours", "--alpha", "45", "--levels", "1.05,1.1,1.2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["contours"].size(), 3u);
  EXPECT_EQ(run_cli({"contours", "--alpha", "30", "--levels", "1.2,1.1"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"contours", "--alpha", "30", "--levels", "1.1,abc"}).code, kExitInvalid);
}

TEST(Cli, SweepRows) {
  const Result r = run_cli({"--format", "csv", "sweep", "--volume", "300"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 201);
}

TEST(Cli, FieldMarker) {
  const Result r = run_cli({"--format", "json", "field", "--kind", "surface", "--volume", "300",
                            "--alpha", "30", "--resolution", "32"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["marker"]["value"].get<double>(), 238.7161, 5e-4);
  EXPECT_EQ(run_cli({"field", "--alpha", "30", "--resolution", "8"}).code, kExitInvalid);
}

TEST(Cli, CurveNeedsBothBounds) {
  EXPECT_EQ(run_cli({"curve", "--floor", "100", "--height", "3", "--alpha", "30", "--w-min", "2"}).code,
            kExitInvalid);
  EXPECT_EQ(run_cli({"curve", "--floor", "100", "--height", "3", "--alpha", "30", "--w-min", "2",
                     "--w-max", "20"})
                .code,
            kExitOk);
}

TEST(Cli, VerifyDeterministic) {
  const Result a = run_cli({"--format", "json", "verify", "--cases", "5"});
  const Result b = run_cli({"--format", "json", "verify", "--cases", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Result bad = run_cli({"verify", "--cases", "3", "--inject-perturbation", "1.001"});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "barnopt_cli_out.json";
  std::filesystem::remove(path);
  const Result r = run_cli({"--format", "json", "--out", path.string(), "optimize-volume",
                            "--volume", "300", "--alpha", "30"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const Result direct = run_cli({"--format", "json", "optimize-volume", "--volume", "300", "--alpha", "30"});
  EXPECT_EQ(ss.str(), direct.out);
  EXPECT_EQ(run_cli({"--out", "/nonexistent/dir/x.json", "optimize-volume", "--volume", "300",
                     "--alpha", "30"})
                .code,
            kExitFailure);
}

}  // namespace
}  // namespace barn::cli
