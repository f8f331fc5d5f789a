// Command-line front end: sweep, solve, converge, montecarlo, chart.
//
// Exit codes: 0 success, 1 validation or parse error, 2 I/O error,
// 3 solver non-convergence.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vlcopt/chart.hpp"
#include "vlcopt/commands.hpp"
#include "vlcopt/errors.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kIo = 2,
  kNoConvergence = 3,
};

void print_summary(const vlcopt::RunReport& r) {
  std::cout << "command=" << r.command << " digest=" << r.digest
            << " seed=" << r.seed << " rows=" << r.rows.size()
            << " wall_s=" << r.wall_seconds << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint VLC downlink / RF uplink time-splitting optimizer"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::string csv;
  std::size_t mt = 0;
  std::size_t points = 0;
  std::size_t draws = 1000;
  std::uint64_t seed = 1;
  double eps = vlcopt::kDefaultEpsilon;
  unsigned threads = 0;
  std::string method = "closed";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Scenario JSON")->required();
    sub->add_option("--mt", mt, "Mobile terminal index")->required();
    sub->add_option("--seed", seed, "Fading seed");
    sub->add_option("--out", out, "Output CSV")->required();
  };

  auto* sweep = app.add_subcommand("sweep", "Evaluate R(alpha) on a grid");
  add_common(sweep);
  sweep->add_option("--points", points, "Grid points (default 101)");

  auto* solve = app.add_subcommand("solve", "Optimal time-splitting coefficient");
  add_common(solve);
  solve->add_option("--method", method, "closed | iter | grid")
      ->check(CLI::IsMember({"closed", "iter", "grid"}));
  solve->add_option("--points", points, "Grid points for --method grid");
  solve->add_option("--eps", eps, "Bisection tolerance for --method iter");

  auto* converge =
      app.add_subcommand("converge", "Bisection traces per VLC bandwidth");
  add_common(converge);
  converge->add_option("--eps", eps, "Bisection tolerance");

  auto* mc = app.add_subcommand("montecarlo", "Per-draw solves over fading");
  add_common(mc);
  mc->add_option("--draws", draws, "Number of fading draws");
  mc->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* chart = app.add_subcommand("chart", "Render a sweep/converge CSV as SVG");
  chart->add_option("--csv", csv, "Input CSV")->required();
  chart->add_option("--out", out, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (sweep->parsed()) {
      print_summary(vlcopt::cmd_sweep(config, mt, points ? points : 101, seed,
                                      out));
    } else if (solve->parsed()) {
      vlcopt::Method m = vlcopt::Method::kClosedForm;
      if (method == "iter") m = vlcopt::Method::kIterative;
      if (method == "grid") m = vlcopt::Method::kGrid;
      print_summary(vlcopt::cmd_solve(
          config, mt, m, seed, out,
          points ? points : vlcopt::kDefaultGridPoints, eps));
    } else if (converge->parsed()) {
      print_summary(vlcopt::cmd_converge(config, mt, eps, seed, out));
    } else if (mc->parsed()) {
      print_summary(
          vlcopt::cmd_montecarlo(config, mt, draws, seed, out, threads));
    } else if (chart->parsed()) {
      const vlcopt::Chart c = vlcopt::cmd_chart(csv, out);
      std::cout << "command=chart series=" << c.series.size() << '\n';
    }
  } catch (const vlcopt::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const vlcopt::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const vlcopt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
