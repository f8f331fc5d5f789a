#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "vlcopt/optimizer.hpp"
#include "vlcopt/report.hpp"
#include "vlcopt/scenario.hpp"

namespace vlcopt {

// Each run_* builds the CSV rows for an in-memory scenario. The cmd_*
// wrappers load the config, stamp digest and wall time, and write the CSV.
//
// Every command uses a single fading draw, |h| from stream 0 of `seed`,
// except montecarlo, where draw i uses stream i.

inline constexpr std::size_t kDefaultGridPoints = 10000;

/// alpha,R_total,R_d_term,R_u_term,E_H on a uniform alpha grid.
RunReport run_sweep(const Scenario& scenario, std::size_t mt_index,
                    std::size_t n_points, std::uint64_t seed);

/// alpha_star,R_star,lambda,mu,method,iterations.
RunReport run_solve(const Scenario& scenario, std::size_t mt_index,
                    Method method, std::uint64_t seed,
                    std::size_t grid_points = kDefaultGridPoints,
                    double epsilon = kDefaultEpsilon);

/// B_v,iteration,alpha,residual: one bisection trace per VLC bandwidth in the
/// scenario's sweep list (or just params.B_v when the list is empty). A
/// boundary solution is written as a single row with residual 0.
RunReport run_converge(const Scenario& scenario, std::size_t mt_index,
                       double epsilon, std::uint64_t seed);

/// draw_index,h_sq,alpha_star,R_star per draw, then a "mean" and a "std"
/// row. Rows are independent of `threads` (0 picks the hardware count).
RunReport run_montecarlo(const Scenario& scenario, std::size_t mt_index,
                         std::size_t n_draws, std::uint64_t seed,
                         unsigned threads = 0);

RunReport cmd_sweep(const std::string& config_path, std::size_t mt_index,
                    std::size_t n_points, std::uint64_t seed,
                    const std::string& out_path);

RunReport cmd_solve(const std::string& config_path, std::size_t mt_index,
                    Method method, std::uint64_t seed,
                    const std::string& out_path,
                    std::size_t grid_points = kDefaultGridPoints,
                    double epsilon = kDefaultEpsilon);

RunReport cmd_converge(const std::string& config_path, std::size_t mt_index,
                       double epsilon, std::uint64_t seed,
                       const std::string& out_path);

RunReport cmd_montecarlo(const std::string& config_path, std::size_t mt_index,
                         std::size_t n_draws, std::uint64_t seed,
                         const std::string& out_path, unsigned threads = 0);

}  // namespace vlcopt
