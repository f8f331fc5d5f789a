#include "vlcopt/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "vlcopt/errors.hpp"
#include "vlcopt/harvest_uplink.hpp"
#include "vlcopt/objective.hpp"

namespace vlcopt {

namespace {

struct Link {
  std::size_t serving = 0;
  double h_sq = 0.0;
  ReducedCoefficients coeffs;
  HarvestConstants harvest;
};

void check_mt(const Scenario& scenario, std::size_t mt_index) {
  if (mt_index >= scenario.mts.size()) {
    throw ValidationError("--mt", "MT index " + std::to_string(mt_index) +
                                      " out of range");
  }
}

Link prepare_link(const Scenario& scenario, std::size_t mt_index,
                  std::uint64_t seed, std::uint64_t stream) {
  check_mt(scenario, mt_index);
  Link link;
  link.serving = associate(scenario, mt_index);
  const double h =
      draw_uplink_channel(scenario.mts[mt_index], seed, stream).magnitude;
  link.h_sq = h * h;
  link.coeffs = reduce(scenario, mt_index, link.serving, link.h_sq);
  link.harvest = harvest_constants(scenario, mt_index, link.serving);
  return link;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Loads the config, runs `body`, writes the CSV and stamps metadata.
RunReport run_command(const std::string& name, const std::string& config_path,
                      const std::string& out_path, std::uint64_t seed,
                      const std::function<RunReport(const Scenario&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_text(config_path);
  const Scenario scenario = load_scenario(text);
  RunReport report = body(scenario);
  report.command = name;
  report.digest = scenario_digest(text);
  report.seed = seed;
  write_csv(report, out_path);
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace

RunReport run_sweep(const Scenario& scenario, std::size_t mt_index,
                    std::size_t n_points, std::uint64_t seed) {
  if (n_points < 2) throw ValidationError("--points", "must be >= 2");
  const Link link = prepare_link(scenario, mt_index, seed, 0);

  RunReport report;
  report.command = "sweep";
  report.seed = seed;
  report.header = {"alpha", "R_total", "R_d_term", "R_u_term", "E_H"};
  const double den = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double alpha = static_cast<double>(i) / den;
    const ObjectiveEval ev = total_rate(link.coeffs, alpha);
    report.rows.push_back({format_number(alpha), format_number(ev.total),
                           format_number(ev.downlink_term),
                           format_number(ev.uplink_term),
                           format_number(harvested_energy(link.harvest, alpha))});
  }
  return report;
}

RunReport run_solve(const Scenario& scenario, std::size_t mt_index,
                    Method method, std::uint64_t seed,
                    std::size_t grid_points, double epsilon) {
  const Link link = prepare_link(scenario, mt_index, seed, 0);
  const OptResult r = solve(link.coeffs, method, epsilon, grid_points);

  RunReport report;
  report.command = "solve";
  report.seed = seed;
  report.header = {"alpha_star", "R_star", "lambda", "mu", "method",
                   "iterations"};
  report.rows.push_back({format_number(r.kkt.alpha), format_number(r.value),
                         format_number(r.kkt.lambda), format_number(r.kkt.mu),
                         std::string(method_name(method)),
                         std::to_string(r.iterations)});
  return report;
}

RunReport run_converge(const Scenario& scenario, std::size_t mt_index,
                       double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw ValidationError("--eps", "must be > 0");
  check_mt(scenario, mt_index);
  std::vector<double> bandwidths = scenario.bandwidth_sweep;
  if (bandwidths.empty()) bandwidths.push_back(scenario.params.vlc_bandwidth);

  RunReport report;
  report.command = "converge";
  report.seed = seed;
  report.header = {"B_v", "iteration", "alpha", "residual"};
  for (double bw : bandwidths) {
    Scenario variant = scenario;
    variant.params.vlc_bandwidth = bw;
    const Link link = prepare_link(variant, mt_index, seed, 0);
    const OptResult r = solve_iterative(link.coeffs, epsilon);
    const std::string bw_text = format_number(bw);
    if (r.trace.empty()) {
      report.rows.push_back({bw_text, "1", format_number(r.kkt.alpha), "0"});
      continue;
    }
    for (const TraceEntry& t : r.trace) {
      report.rows.push_back({bw_text, std::to_string(t.iteration),
                             format_number(t.alpha),
                             format_number(t.residual)});
    }
  }
  return report;
}

RunReport run_montecarlo(const Scenario& scenario, std::size_t mt_index,
                         std::size_t n_draws, std::uint64_t seed,
                         unsigned threads) {
  if (n_draws < 1) throw ValidationError("--draws", "must be >= 1");
  check_mt(scenario, mt_index);

  struct Draw {
    double h_sq = 0.0;
    double alpha = 0.0;
    double value = 0.0;
  };
  std::vector<Draw> draws(n_draws);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n_draws; i += stride) {
      const Link link = prepare_link(scenario, mt_index, seed, i);
      const OptResult r = solve_closed_form(link.coeffs);
      draws[i] = {link.h_sq, r.kkt.alpha, r.value};
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, n_draws));
  if (threads <= 1) {
    work(0, 1);
  } else {
    // Exceptions are data-independent (association, validation), so the
    // first draw reproduces any failure on the calling thread.
    prepare_link(scenario, mt_index, seed, 0);
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
  }

  RunReport report;
  report.command = "montecarlo";
  report.seed = seed;
  report.header = {"draw_index", "h_sq", "alpha_star", "R_star"};
  double sum[3] = {0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n_draws; ++i) {
    const Draw& d = draws[i];
    report.rows.push_back({std::to_string(i), format_number(d.h_sq),
                           format_number(d.alpha), format_number(d.value)});
    sum[0] += d.h_sq;
    sum[1] += d.alpha;
    sum[2] += d.value;
  }
  const double n = static_cast<double>(n_draws);
  const double mean[3] = {sum[0] / n, sum[1] / n, sum[2] / n};
  double sq[3] = {0.0, 0.0, 0.0};
  for (const Draw& d : draws) {
    const double v[3] = {d.h_sq, d.alpha, d.value};
    for (int c = 0; c < 3; ++c) sq[c] += (v[c] - mean[c]) * (v[c] - mean[c]);
  }
  std::vector<std::string> mean_row{"mean"};
  std::vector<std::string> std_row{"std"};
  for (int c = 0; c < 3; ++c) {
    mean_row.push_back(format_number(mean[c]));
    std_row.push_back(
        format_number(n_draws > 1 ? std::sqrt(sq[c] / (n - 1.0)) : 0.0));
  }
  report.rows.push_back(std::move(mean_row));
  report.rows.push_back(std::move(std_row));
  return report;
}

RunReport cmd_sweep(const std::string& config_path, std::size_t mt_index,
                    std::size_t n_points, std::uint64_t seed,
                    const std::string& out_path) {
  return run_command("sweep", config_path, out_path, seed,
                     [&](const Scenario& s) {
                       return run_sweep(s, mt_index, n_points, seed);
                     });
}

RunReport cmd_solve(const std::string& config_path, std::size_t mt_index,
                    Method method, std::uint64_t seed,
                    const std::string& out_path, std::size_t grid_points,
                    double epsilon) {
  return run_command("solve", config_path, out_path, seed,
                     [&](const Scenario& s) {
                       return run_solve(s, mt_index, method, seed, grid_points,
                                        epsilon);
                     });
}

RunReport cmd_converge(const std::string& config_path, std::size_t mt_index,
                       double epsilon, std::uint64_t seed,
                       const std::string& out_path) {
  return run_command("converge", config_path, out_path, seed,
                     [&](const Scenario& s) {
                       return run_converge(s, mt_index, epsilon, seed);
                     });
}

RunReport cmd_montecarlo(const std::string& config_path, std::size_t mt_index,
                         std::size_t n_draws, std::uint64_t seed,
                         const std::string& out_path, unsigned threads) {
  return run_command("montecarlo", config_path, out_path, seed,
                     [&](const Scenario& s) {
                       return run_montecarlo(s, mt_index, n_draws, seed,
                                             threads);
                     });
}

}  // namespace vlcopt
