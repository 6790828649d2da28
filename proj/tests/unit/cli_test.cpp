#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using bhgame::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bhgame_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(Cli, HelpListsFlagsWithDefaults) {
  const Result r = run({"sweep", "--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--alpha", "1.05", "--beta", "0.05", "--capacity", "15",
                           "--resource-model", "growth", "--mortality-in-logistic",
                           "--interpolation-normalize", "--workers", "--grid", "100",
                           "--registration", "centers", "--full-volume", "--image", "--manifest"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
}

TEST(Cli, MissingSubcommandIsUsageError) { EXPECT_EQ(run({}).code, 2); }

TEST(Cli, UnknownFlagIsUsageError) { EXPECT_EQ(run({"payoff", "--bogus"}).code, 2); }

TEST(Cli, InfoCurvesCsv) {
  const fs::path out = scratch("curves.csv");
  const Result r = run({"info-curves", "--model", "default", "--max-n", "15", "-o", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(out);
  EXPECT_EQ(lines(text), 17u);  // header plus 16 rows
  EXPECT_NE(text.find("\n1,2.0,0.390159695,0.390159695,0.780319391\n"), std::string::npos);
}

TEST(Cli, InfoCurvesModifiedModel) {
  const Result r = run({"info-curves", "--model", "modified", "--max-n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n1,2.0,0.389767"), std::string::npos) << r.out;
}

TEST(Cli, InfoCurvesJson) {
  const Result r = run({"info-curves", "--max-n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"both_species\""), std::string::npos);
}

TEST(Cli, InfoCurvesBeyondCapacity) {
  const Result r = run({"info-curves", "--max-n", "20"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("capacity"), std::string::npos);
}

TEST(Cli, PayoffMatrixText) {
  const Result r = run({"payoff", "--x", "0.5", "--y", "0.2", "--r", "1.8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("-0.352045771"), std::string::npos);
  EXPECT_NE(r.out.find("class NoDominantStrategy"), std::string::npos);
}

TEST(Cli, PayoffCrowded) {
  const Result r = run({"payoff", "--x", "0.6", "--y", "0.6", "--r", "1.8", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"class\": \"NotShareWeaklyDominant\""), std::string::npos);
}

TEST(Cli, PayoffEmptySystem) {
  const Result r = run({"payoff", "--x", "0", "--y", "0", "--r", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("class Extinct (code 0)"), std::string::npos);
}

TEST(Cli, PayoffGrowthUnits) {
  const Result r = run({"payoff", "--x", "0", "--y", "0", "--r", "1", "--units", "growth"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.5"), std::string::npos);
}

TEST(Cli, PayoffOutOfRange) {
  EXPECT_EQ(run({"payoff", "--x", "1.5", "--y", "0.2", "--r", "1.8"}).code, 2);
  EXPECT_EQ(run({"payoff", "--x", "0.5", "--y", "0.2", "--r", "-1"}).code, 2);
  EXPECT_EQ(run({"payoff", "--x", "0.5", "--y", "0.2"}).code, 2);
}

TEST(Cli, MissingSensorFileIsRuntimeFailure) {
  EXPECT_EQ(run({"payoff", "--x", "0.5", "--y", "0.2", "--r", "1.8", "--model",
                 "/nonexistent/sensors.txt"})
                .code,
            1);
}

TEST(Cli, SweepWritesCsvImageAndManifest) {
  const fs::path csv = scratch("slice.csv"), ppm = scratch("slice.ppm");
  const Result r = run({"sweep", "--r-fixed", "3.0", "--grid", "12", "--workers", "2", "-o",
                        csv.string(), "--image", ppm.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(csv);
  EXPECT_EQ(lines(text), 145u);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) EXPECT_EQ(line.back(), '4') << line;
  EXPECT_EQ(slurp(ppm).substr(0, 11), "P6\n12 12\n25");
  const std::string manifest = slurp(csv.string() + ".manifest.json");
  EXPECT_NE(manifest.find("\"fixed_r\": 3.0"), std::string::npos);
  EXPECT_NE(manifest.find(ppm.string()), std::string::npos);
}

TEST(Cli, SweepIsReproducible) {
  const fs::path a = scratch("a.csv"), b = scratch("b.csv");
  ASSERT_EQ(run({"sweep", "--r-fixed", "1.8", "--grid", "10", "--workers", "1", "-o",
                 a.string(), "--no-manifest"}).code, 0);
  ASSERT_EQ(run({"sweep", "--r-fixed", "1.8", "--grid", "10", "--workers", "3", "-o",
                 b.string(), "--no-manifest"}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, SweepVolumeRanges) {
  const Result r = run({"sweep", "--grid", "2", "--r-range", "1:2", "--r-steps", "3",
                        "--registration", "endpoints"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 13u);
  EXPECT_NE(r.out.find("\n1.0,1.0,1.5,"), std::string::npos);
}

TEST(Cli, SweepImageNeedsSlice) {
  EXPECT_EQ(run({"sweep", "--grid", "2", "--image", scratch("v.ppm").string()}).code, 2);
}

TEST(Cli, SweepBadRange) {
  EXPECT_EQ(run({"sweep", "--grid", "2", "--x-range", "0.5"}).code, 2);
  EXPECT_EQ(run({"sweep", "--grid", "2", "--x-range", "0:1.5"}).code, 2);
}

TEST(Cli, WorkerEnvironmentVariable) {
  ::setenv("BHGAME_WORKERS", "nonsense", 1);
  EXPECT_EQ(run({"sweep", "--r-fixed", "2", "--grid", "2"}).code, 2);
  ::setenv("BHGAME_WORKERS", "2", 1);
  EXPECT_EQ(run({"sweep", "--r-fixed", "2", "--grid", "2"}).code, 0);
  ::unsetenv("BHGAME_WORKERS");
}

TEST(Cli, ReplenishShiftsCrowdedCorner) {
  const Result growth = run({"sweep", "--r-fixed", "1.8", "--grid", "2", "--x-range", "0.9:1",
                             "--y-range", "0.9:1"});
  const Result replenish = run({"sweep", "--r-fixed", "1.8", "--grid", "2", "--x-range",
                                "0.9:1", "--y-range", "0.9:1", "--resource-model", "replenish",
                                "--beta", "0.05"});
  ASSERT_EQ(growth.code, 0);
  ASSERT_EQ(replenish.code, 0);
  std::istringstream g(growth.out), p(replenish.out);
  std::string gl, pl;
  std::getline(g, gl);
  std::getline(p, pl);
  while (std::getline(g, gl) && std::getline(p, pl)) {
    EXPECT_EQ(gl.back(), '0');
    EXPECT_EQ(pl.back(), '2');
  }
}
