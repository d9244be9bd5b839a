#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "bsw/errors.hpp"
#include "config.hpp"

namespace bsw::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bswctl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) {
  return std::string(BSW_CONFIG_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = fs::temp_directory_path() / ("bsw_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string without_timing(const std::string& report) {
  std::string out;
  for (const auto& l : lines(report))
    if (l.rfind("wall_time_", 0) != 0) out += l + "\n";
  return out;
}

TEST(CliBuild, HomogeneousSixteenCopies) {
  const auto path = write_temp(
      "h16.json",
      R"({"n": 20, "L": 16, "source": 1, "destination": 2, "mean": 200})");
  const auto r = invoke({"build", path});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("state_count=37\n"), std::string::npos);
}

TEST(CliBuild, ForcedHeterogeneousFiveNodes) {
  const auto path = write_temp(
      "f5.json", R"({"n": 5, "L": 4, "source": 1, "destination": 5, "mean": 100})");
  const auto r = invoke({"build", path, "--force-hetero"});
  EXPECT_EQ(r.code, kOk);
  // Reachable states of binary spray and wait, absorbing state included.
  EXPECT_NE(r.out.find("state_count=15\n"), std::string::npos);
}

TEST(CliBuild, NonPowerOfTwoIsConfigError) {
  const auto r = invoke({"build", config("bad_copies.json")});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("power of two"), std::string::npos);
}

TEST(CliBuild, ConfigErrors) {
  EXPECT_EQ(invoke({"build", "/nonexistent/config.json"}).code, kConfigError);
  EXPECT_EQ(invoke({"build", write_temp("junk.json", "{not json")}).code,
            kConfigError);
  const auto both = write_temp(
      "both.json",
      R"({"n": 3, "L": 2, "source": 1, "destination": 3, "mean": 5,
          "contacts": [{"i": 1, "j": 2, "mean_s": 5}]})");
  EXPECT_EQ(invoke({"build", both}).code, kConfigError);
  const auto range = write_temp(
      "range.json", R"({"n": 3, "L": 2, "source": 1, "destination": 4, "mean": 5})");
  const auto r = invoke({"build", range});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("destination"), std::string::npos);
}

TEST(CliBuild, CeilingViolations) {
  const auto big = write_temp(
      "big.json", R"({"n": 30, "L": 4, "source": 1, "destination": 30, "mean": 9})");
  EXPECT_EQ(invoke({"build", big, "--force-hetero"}).code, kCeiling);

  ::setenv("BSW_MAX_STATES", "5", 1);
  const auto r = invoke({"build", config("homogeneous_case3_ndc.json")});
  ::unsetenv("BSW_MAX_STATES");
  EXPECT_EQ(r.code, kCeiling);
}

TEST(CliBuild, DumpChainLabels) {
  const auto r = invoke({"dump-chain", config("homogeneous_case1_ndc.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(lines(r.out).front(), "{4} -> {2,2} : 0.08");
  EXPECT_EQ(r.out.find("{4} -> ABS"), std::string::npos);

  const auto het = invoke({"dump-chain", config("heterogeneous_case1.json")});
  EXPECT_EQ(lines(het.out).front(), "{1:4} -> {1:2,2:2} : 0.01");
}

TEST(CliSolve, HomogeneousReachesOne) {
  const auto r = invoke(
      {"solve", config("homogeneous_case1.json"), "--t-max", "2500"});
  ASSERT_EQ(r.code, kOk);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "t_seconds,cdf");
  EXPECT_EQ(rows.back(), "# delivery_ratio=1");
  ASSERT_EQ(rows.size(), 503u);  // header, t=0, 500 points, ratio comment
  const auto& last = rows[rows.size() - 2];
  EXPECT_EQ(last.rfind("2500,", 0), 0u);
  EXPECT_GE(std::stod(last.substr(5)), 0.999);
}

TEST(CliSolve, HeterogeneousCaseOneDeliversEverything) {
  const auto r = invoke({"solve", config("heterogeneous_case1.json")});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(lines(r.out).back(), "# delivery_ratio=1");
}

TEST(CliSolve, IsolatedDestination) {
  const auto r = invoke({"solve", config("isolated_destination.json"),
                         "--grid-points", "20"});
  ASSERT_EQ(r.code, kOk);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.back(), "# delivery_ratio=0");
  for (std::size_t i = 1; i + 1 < rows.size(); ++i)
    EXPECT_EQ(rows[i].substr(rows[i].find(',')), ",0");
}

TEST(CliSolve, OutputIsByteStable) {
  const auto a = invoke({"solve", config("heterogeneous_case1.json")});
  const auto b = invoke({"solve", config("heterogeneous_case1.json")});
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSolve, WritesToOutPath) {
  const auto path = (fs::temp_directory_path() / "bsw_cli_solve.csv").string();
  const auto r = invoke({"solve", config("homogeneous_case1.json"), "--out", path});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t_seconds,cdf");
}

TEST(CliCompare, DeterministicReportAndCsv) {
  const std::vector<std::string> args{"compare", config("heterogeneous_case1.json"),
                                      "--ne", "500", "--seed", "8",
                                      "--grid-points", "100"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(without_timing(a.err), without_timing(b.err));
  EXPECT_EQ(lines(a.out).front(), "t_seconds,cdf_model,cdf_sim");
  EXPECT_NE(a.err.find("ks_distance="), std::string::npos);
  EXPECT_NE(a.err.find("delivery_ratio_sim="), std::string::npos);
}

TEST(CliCompare, ThresholdFailureExitCode) {
  const auto r = invoke({"compare", config("homogeneous_case1.json"), "--ne",
                         "50", "--ks-threshold", "0"});
  EXPECT_EQ(r.code, kComparisonFailed);
}

TEST(CliSimulate, OutcomeCsv) {
  const auto r = invoke({"simulate", config("homogeneous_case1.json"), "--ne", "3"});
  ASSERT_EQ(r.code, kOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "msg_id,delivered,delay_s");
  EXPECT_EQ(rows[1].rfind("0,1,", 0), 0u);
}

TEST(CliTrace, LogFormat) {
  const auto r = invoke({"trace", config("homogeneous_case1.json"), "--horizon", "100"});
  ASSERT_EQ(r.code, kOk);
  for (const auto& l : lines(r.out)) EXPECT_EQ(l.rfind("t=", 0), 0u);
  EXPECT_EQ(invoke({"trace", config("homogeneous_case1.json"), "--horizon", "-1"})
                .code,
            kConfigError);
}

TEST(CliGenRandom, ProducesValidSparseNetworks) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = invoke({"gen-random", "--n", "12", "--L", "8", "--seed",
                           std::to_string(seed)});
    ASSERT_EQ(r.code, kOk);
    const auto spec = parse_config(nlohmann::json::parse(r.out));
    const auto view = validate_spec(spec);
    EXPECT_EQ(view.node_count(), 12u);
    EXPECT_EQ(view.replication_factor(), 8u);
    for (NodeId i = 0; i < 12; ++i) EXPECT_GE(view.neighbours(i).size(), 2u);
    EXPECT_GE(view.min_mean(), 200.0);
    EXPECT_LE(view.max_mean(), 1200.0);
    EXPECT_EQ(r.out, invoke({"gen-random", "--n", "12", "--L", "8", "--seed",
                             std::to_string(seed)})
                         .out);
  }
}

TEST(Config, RoundTripThroughJson) {
  const auto spec = load_config(config("heterogeneous_case1.json"));
  const auto again = parse_config(to_json(spec));
  EXPECT_EQ(validate_spec(again), validate_spec(spec));
  EXPECT_EQ(spec.source, 0u);
  EXPECT_EQ(spec.destination, 4u);
  EXPECT_FALSE(spec.mean(0, 4));
}

TEST(Config, DirectContactFalseRemovesSourceDestinationPair) {
  const auto spec = load_config(config("homogeneous_case1_ndc.json"));
  EXPECT_FALSE(spec.mean(0, 5));
  EXPECT_EQ(spec.mean_intercontact.size(), 14u);
}

}  // namespace
}  // namespace bsw::cli
