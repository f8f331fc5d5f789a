#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "vlcopt/objective.hpp"

namespace vlcopt {

// KKT point of  max R(alpha)  s.t.  alpha - 1 <= 0,  -alpha <= 0.
// Stationarity reads dR/dalpha - lambda + mu = 0 with lambda, mu >= 0.
struct KktPoint {
  double alpha = 0.0;
  double lambda = 0.0;  // multiplier of alpha - 1 <= 0
  double mu = 0.0;      // multiplier of -alpha <= 0
};

struct TraceEntry {
  int iteration = 0;
  double alpha = 0.0;
  double residual = 0.0;  // |alpha(l+1) - alpha(l)|
};

enum class Method { kClosedForm, kIterative, kGrid };

std::string_view method_name(Method method);

struct OptResult {
  KktPoint kkt;
  double value = 0.0;  // R at kkt.alpha
  ObjectiveEval breakdown;
  std::vector<TraceEntry> trace;
  int iterations = 0;
};

struct GridOptimum {
  double alpha = 0.0;
  double value = 0.0;
};

inline constexpr double kDefaultEpsilon = 1e-9;
inline constexpr int kDefaultMaxIter = 200;

/// Root of dR/dalpha, possibly outside [0, 1]:
///   1 + (g + e)/d - b2 / (ln2 * b1 * log2(1 + a/(b + c))).
/// Empty when d == 0 or the downlink slope is zero, in which case R has no
/// stationary point and the optimum sits on the boundary.
std::optional<double> stationary_alpha(const ReducedCoefficients& coeffs);

OptResult solve_closed_form(const ReducedCoefficients& coeffs);

/// Bisection on the strictly decreasing derivative. Each iteration halves the
/// bracket; the loop stops once two successive midpoints differ by at most
/// `epsilon`, and a Newton step confined to the final bracket polishes the
/// root. Throws NonConvergenceError after `max_iter` iterations.
OptResult solve_iterative(const ReducedCoefficients& coeffs,
                          double epsilon = kDefaultEpsilon,
                          int max_iter = kDefaultMaxIter);

/// Brute-force argmax over {0, 1/(n-1), ..., 1}; ties go to the smallest
/// alpha.
GridOptimum grid_oracle(const ReducedCoefficients& coeffs,
                        std::size_t n_points);

/// OptResult wrapper around grid_oracle with multipliers from the boundary
/// rule.
OptResult solve_grid(const ReducedCoefficients& coeffs, std::size_t n_points);

OptResult solve(const ReducedCoefficients& coeffs, Method method,
                double epsilon = kDefaultEpsilon,
                std::size_t grid_points = 10000);

/// |dR/dalpha(alpha) - lambda + mu| at the point.
double stationarity_residual(const ReducedCoefficients& coeffs,
                             const KktPoint& point);

}  // namespace vlcopt
