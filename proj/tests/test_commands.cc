#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "support/config_io.hpp"
#include "support/instances.hpp"
#include "vlcopt/chart.hpp"
#include "vlcopt/commands.hpp"
#include "vlcopt/errors.hpp"

namespace vlcopt {
namespace {

namespace fs = std::filesystem;

const std::string kOffice = VLCOPT_SOURCE_DIR "/configs/office.json";

std::vector<double> column(const testing::CsvRows& rows, std::size_t c) {
  std::vector<double> out;
  for (std::size_t i = 1; i < rows.size(); ++i) out.push_back(std::stod(rows[i][c]));
  return out;
}

TEST(FormatNumber, SeventeenSignificantDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(2e7), "20000000");
  EXPECT_EQ(std::stod(format_number(M_PI)), M_PI);
}

TEST(Digest, StableAcrossKeyOrder) {
  const std::string a = R"({"x": 1, "y": {"b": 2, "a": [1, 2]}})";
  const std::string b = R"({"y": {"a": [1, 2], "b": 2},   "x": 1})";
  EXPECT_EQ(scenario_digest(a), scenario_digest(b));
  EXPECT_NE(scenario_digest(a), scenario_digest(R"({"x": 2, "y": {}})"));
  EXPECT_EQ(scenario_digest(a).size(), 16u);
}

TEST(Sweep, TwoPointsHitsBothBounds) {
  const Scenario s = load_scenario_file(kOffice);
  const RunReport r = run_sweep(s, 0, 2, 1);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0][0], "0");
  EXPECT_EQ(r.rows[1][0], "1");
  EXPECT_EQ(r.rows[0][2], "0");
  EXPECT_THROW(run_sweep(s, 0, 1, 1), ValidationError);
  EXPECT_THROW(run_sweep(s, 7, 11, 1), ValidationError);
}

TEST(Sweep, HeaderAndUnimodalTotals) {
  const fs::path dir = testing::scratch_dir("sweep");
  const RunReport r = cmd_sweep(kOffice, 0, 101, 5, (dir / "s.csv").string());
  EXPECT_EQ(r.command, "sweep");
  EXPECT_EQ(r.digest.size(), 16u);
  const auto rows = testing::split_csv(testing::read_file(dir / "s.csv"));
  ASSERT_EQ(rows.size(), 102u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha", "R_total", "R_d_term",
                                               "R_u_term", "E_H"}));
  const auto alpha = column(rows, 0);
  EXPECT_TRUE(std::is_sorted(alpha.begin(), alpha.end()));
  EXPECT_TRUE(testing::is_unimodal(column(rows, 1)));
}

TEST(Sweep, UnimodalOnRandomScenarios) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = testing::random_scenario(rng);
    const RunReport r = run_sweep(s, 0, 101, trial);
    std::vector<double> totals;
    for (const auto& row : r.rows) totals.push_back(std::stod(row[1]));
    EXPECT_TRUE(testing::is_unimodal(totals)) << "trial " << trial;
  }
}

TEST(Solve, ClosedAndIterativeAgree) {
  const Scenario s = load_scenario_file(kOffice);
  for (std::uint64_t seed : {1, 2, 3}) {
    const RunReport closed = run_solve(s, 0, Method::kClosedForm, seed);
    const RunReport iter = run_solve(s, 0, Method::kIterative, seed);
    EXPECT_NEAR(std::stod(closed.rows[0][0]), std::stod(iter.rows[0][0]), 2e-9);
    EXPECT_EQ(closed.rows[0][4], "closed");
    EXPECT_EQ(iter.rows[0][4], "iter");
  }
}

TEST(Solve, GridMatchesClosedFormValue) {
  const Scenario s = load_scenario_file(kOffice);
  const RunReport closed = run_solve(s, 0, Method::kClosedForm, 1);
  const RunReport grid = run_solve(s, 0, Method::kGrid, 1, 10000);
  const double rc = std::stod(closed.rows[0][1]);
  const double rg = std::stod(grid.rows[0][1]);
  EXPECT_LE(std::abs(rc - rg) / rc, 1e-8);
  EXPECT_EQ(grid.rows[0][5], "10000");
}

TEST(Solve, DownlinkDominantConfig) {
  Scenario s = load_scenario_file(kOffice);
  s.params.rf_bandwidth = 1e3;
  const RunReport r = run_solve(s, 0, Method::kClosedForm, 1);
  EXPECT_EQ(r.rows[0][0], "1");
  EXPECT_GT(std::stod(r.rows[0][2]), 0.0);
  EXPECT_EQ(r.rows[0][3], "0");
}

TEST(Converge, TraceShapePerBandwidth) {
  const Scenario s = load_scenario_file(kOffice);
  const double eps = 1e-9;
  const RunReport r = run_converge(s, 0, eps, 1);
  EXPECT_EQ(r.header, (std::vector<std::string>{"B_v", "iteration", "alpha",
                                                "residual"}));
  std::map<std::string, std::vector<std::vector<std::string>>> blocks;
  for (const auto& row : r.rows) blocks[row[0]].push_back(row);
  ASSERT_EQ(blocks.size(), s.bandwidth_sweep.size());
  std::set<std::string> finals;
  for (const auto& [bw, rows] : blocks) {
    EXPECT_LE(rows.size(), std::ceil(std::log2(1 / eps)) + 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      EXPECT_LE(std::stod(rows[i][3]), std::stod(rows[i - 1][3]));
    }
    finals.insert(rows.back()[2]);
  }
  EXPECT_EQ(finals.size(), blocks.size());
}

TEST(Converge, DoubledBandwidthMovesOptimum) {
  Scenario s = load_scenario_file(kOffice);
  s.bandwidth_sweep = {20e6, 40e6};
  const RunReport r = run_converge(s, 0, 1e-9, 1);
  const std::string first = r.rows.front()[0];
  std::string last_a, last_b;
  for (const auto& row : r.rows) (row[0] == first ? last_a : last_b) = row[2];
  EXPECT_FALSE(last_b.empty());
  EXPECT_GT(std::abs(std::stod(last_a) - std::stod(last_b)), 1e-3);
}

TEST(Converge, BoundarySolutionWritesSingleRow) {
  Scenario s = load_scenario_file(kOffice);
  s.params.rf_bandwidth = 1e3;
  s.bandwidth_sweep.clear();
  const RunReport r = run_converge(s, 0, 1e-9, 1);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0][1], "1");
  EXPECT_EQ(r.rows[0][2], "1");
}

TEST(MonteCarlo, SingleDrawMatchesSolve) {
  const Scenario s = load_scenario_file(kOffice);
  const RunReport mc = run_montecarlo(s, 0, 1, 77);
  const RunReport solve = run_solve(s, 0, Method::kClosedForm, 77);
  ASSERT_EQ(mc.rows.size(), 3u);
  EXPECT_EQ(mc.rows[0][2], solve.rows[0][0]);
  EXPECT_EQ(mc.rows[0][3], solve.rows[0][1]);
  EXPECT_EQ(mc.rows[1][0], "mean");
  EXPECT_EQ(mc.rows[2][0], "std");
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const Scenario s = load_scenario_file(kOffice);
  EXPECT_EQ(to_csv(run_montecarlo(s, 0, 200, 3, 1)),
            to_csv(run_montecarlo(s, 0, 200, 3, 4)));
}

TEST(MonteCarlo, DeterministicChannelLimit) {
  Scenario s = load_scenario_file(kOffice);
  s.mts[0].rician_k = 1e12;
  const RunReport r = run_montecarlo(s, 0, 500, 9);
  EXPECT_LT(std::stod(r.rows.back()[2]), 1e-6);
}

TEST(MonteCarlo, MeanRateStableAcrossSeeds) {
  const Scenario s = load_scenario_file(kOffice);
  const RunReport a = run_montecarlo(s, 0, 10000, 1);
  const RunReport b = run_montecarlo(s, 0, 10000, 2);
  const double ma = std::stod(a.rows[a.rows.size() - 2][3]);
  const double mb = std::stod(b.rows[b.rows.size() - 2][3]);
  EXPECT_LE(std::abs(ma - mb) / ma, 0.01);
}

TEST(Commands, ByteIdenticalReruns) {
  const fs::path dir = testing::scratch_dir("repro");
  cmd_sweep(kOffice, 0, 51, 4, (dir / "a.csv").string());
  cmd_sweep(kOffice, 0, 51, 4, (dir / "b.csv").string());
  EXPECT_EQ(testing::read_file(dir / "a.csv"), testing::read_file(dir / "b.csv"));
  cmd_montecarlo(kOffice, 0, 300, 4, (dir / "c.csv").string());
  cmd_montecarlo(kOffice, 0, 300, 4, (dir / "d.csv").string());
  EXPECT_EQ(testing::read_file(dir / "c.csv"), testing::read_file(dir / "d.csv"));
}

TEST(Commands, IoErrors) {
  EXPECT_THROW(cmd_sweep("/nonexistent.json", 0, 5, 1, "/tmp/x.csv"), IoError);
  EXPECT_THROW(cmd_sweep(kOffice, 0, 5, 1, "/nonexistent/dir/x.csv"), IoError);
}

TEST(Chart, SweepPolylineVertexCount) {
  const Scenario s = load_scenario_file(kOffice);
  const Chart c = chart_from_csv(to_csv(run_sweep(s, 0, 37, 1)));
  ASSERT_EQ(c.series.size(), 3u);
  for (const Series& series : c.series) EXPECT_EQ(series.x.size(), 37u);
  const std::string svg = render_svg(c);
  std::size_t polylines = 0;
  for (std::size_t p = svg.find("<polyline"); p != std::string::npos;
       p = svg.find("<polyline", p + 1)) {
    ++polylines;
  }
  EXPECT_EQ(polylines, 3u);
}

TEST(Chart, ConvergeBlocksBecomeSeries) {
  Scenario s = load_scenario_file(kOffice);
  s.bandwidth_sweep = {20e6, 40e6};
  const fs::path dir = testing::scratch_dir("chart");
  testing::write_file(dir / "cfg.json", testing::to_config(s).dump());
  cmd_converge((dir / "cfg.json").string(), 0, 1e-6, 1, (dir / "c.csv").string());
  const Chart c = cmd_chart((dir / "c.csv").string(), (dir / "c.svg").string());
  EXPECT_EQ(c.series.size(), 2u);
  const std::string svg = testing::read_file(dir / "c.svg");
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("iteration"), std::string::npos);
}

TEST(Chart, MalformedInput) {
  EXPECT_THROW(chart_from_csv(""), CsvError);
  EXPECT_THROW(chart_from_csv("alpha,R_total\n"), CsvError);
  EXPECT_THROW(chart_from_csv("alpha,R_total\n0,abc\n"), CsvError);
  EXPECT_THROW(chart_from_csv("alpha,R_total\n0,1,2\n"), CsvError);
  EXPECT_THROW(cmd_chart("/nonexistent.csv", "/tmp/x.svg"), IoError);
}

// Exercises the real binary for the exit-code contract.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(VLCOPT_CLI_PATH) + " " + args +
                          " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = testing::scratch_dir("cli");
  const std::string out = (dir / "o.csv").string();
  EXPECT_EQ(run_cli("solve --config " + kOffice + " --mt 0 --method iter --out " + out), 0);
  EXPECT_EQ(testing::split_csv(testing::read_file(out))[0][0], "alpha_star");
  EXPECT_EQ(run_cli("sweep --config " + kOffice + " --mt 0 --points 11 --out " + out), 0);
  EXPECT_EQ(run_cli("chart --csv " + out + " --out " + (dir / "o.svg").string()), 0);

  testing::write_file(dir / "bad.json", "{\"room\": ");
  EXPECT_EQ(run_cli("sweep --config " + (dir / "bad.json").string() +
                    " --mt 0 --out " + out), 1);
  EXPECT_EQ(run_cli("sweep --config " + kOffice + " --mt 9 --out " + out), 1);
  EXPECT_EQ(run_cli("solve --config " + kOffice + " --mt 0 --method magic --out " + out), 1);
  EXPECT_EQ(run_cli("sweep --config /nonexistent.json --mt 0 --out " + out), 2);
  EXPECT_EQ(run_cli("sweep --config " + kOffice + " --mt 0 --out /nonexistent/x.csv"), 2);
}

}  // namespace
}  // namespace vlcopt
