#include "vlcopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vlcopt/errors.hpp"

namespace vlcopt {

namespace {

// Multipliers follow from which bound is active.
KktPoint recover_multipliers(const ReducedCoefficients& k, double alpha) {
  KktPoint p{alpha, 0.0, 0.0};
  if (alpha == 1.0) {
    p.lambda = std::max(0.0, rate_derivative(k, 1.0));
  } else if (alpha == 0.0) {
    p.mu = std::max(0.0, -rate_derivative(k, 0.0));
  }
  return p;
}

OptResult finish(const ReducedCoefficients& k, double alpha) {
  OptResult r;
  r.kkt = recover_multipliers(k, alpha);
  r.breakdown = total_rate(k, alpha);
  r.value = r.breakdown.total;
  return r;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kClosedForm:
      return "closed";
    case Method::kIterative:
      return "iter";
    case Method::kGrid:
      return "grid";
  }
  return "unknown";
}

std::optional<double> stationary_alpha(const ReducedCoefficients& k) {
  check_coefficients(k);
  const double slope = downlink_slope(k);
  if (k.d == 0.0 || slope == 0.0) return std::nullopt;
  return 1.0 + (k.g + k.e) / k.d - k.b2 / (std::numbers::ln2 * slope);
}

OptResult solve_closed_form(const ReducedCoefficients& k) {
  check_coefficients(k);
  double alpha;
  if (auto stationary = stationary_alpha(k)) {
    alpha = std::clamp(*stationary, 0.0, 1.0);
  } else {
    // Affine objective (d == 0) rises with a positive slope; otherwise R is
    // non-increasing and the lower bound wins.
    alpha = (k.d == 0.0 && downlink_slope(k) > 0.0) ? 1.0 : 0.0;
  }
  OptResult r = finish(k, alpha);
  r.iterations = 1;
  return r;
}

OptResult solve_iterative(const ReducedCoefficients& k, double epsilon,
                          int max_iter) {
  check_coefficients(k);
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
  if (max_iter < 1) throw DomainError("max_iter must be >= 1");

  if (rate_derivative(k, 0.0) <= 0.0) {
    OptResult r = finish(k, 0.0);
    r.iterations = 1;
    return r;
  }
  if (rate_derivative(k, 1.0) >= 0.0) {
    OptResult r = finish(k, 1.0);
    r.iterations = 1;
    return r;
  }

  std::vector<TraceEntry> trace;
  double lo = 0.0;
  double hi = 1.0;
  double alpha = 0.5;
  bool converged = false;
  for (int l = 1; l <= max_iter; ++l) {
    const double slope = rate_derivative(k, alpha);
    if (slope > 0.0) {
      lo = alpha;
    } else if (slope < 0.0) {
      hi = alpha;
    } else {
      lo = hi = alpha;
    }
    const double next = 0.5 * (lo + hi);
    const double residual = std::abs(next - alpha);
    alpha = next;
    trace.push_back({l, alpha, residual});
    if (residual <= epsilon) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NonConvergenceError("bisection did not reach epsilon within " +
                              std::to_string(max_iter) + " iterations");
  }

  for (int step = 0; step < 3; ++step) {
    const double slope = rate_derivative(k, alpha);
    const double curvature = rate_second_derivative(k, alpha);
    if (slope == 0.0 || curvature == 0.0) break;
    const double candidate = alpha - slope / curvature;
    if (!(candidate >= lo && candidate <= hi)) break;
    alpha = candidate;
  }

  OptResult r = finish(k, alpha);
  r.iterations = static_cast<int>(trace.size());
  r.trace = std::move(trace);
  return r;
}

GridOptimum grid_oracle(const ReducedCoefficients& k, std::size_t n_points) {
  check_coefficients(k);
  if (n_points < 2) throw DomainError("grid needs at least 2 points");
  const double step_den = static_cast<double>(n_points - 1);
  GridOptimum best{0.0, total_rate(k, 0.0).total};
  for (std::size_t i = 1; i < n_points; ++i) {
    const double alpha = static_cast<double>(i) / step_den;
    const double value = total_rate(k, alpha).total;
    if (value > best.value) best = {alpha, value};
  }
  return best;
}

OptResult solve_grid(const ReducedCoefficients& k, std::size_t n_points) {
  const GridOptimum best = grid_oracle(k, n_points);
  OptResult r = finish(k, best.alpha);
  r.iterations = static_cast<int>(n_points);
  return r;
}

OptResult solve(const ReducedCoefficients& k, Method method, double epsilon,
                std::size_t grid_points) {
  switch (method) {
    case Method::kClosedForm:
      return solve_closed_form(k);
    case Method::kIterative:
      return solve_iterative(k, epsilon);
    case Method::kGrid:
      return solve_grid(k, grid_points);
  }
  throw DomainError("unknown solver method");
}

double stationarity_residual(const ReducedCoefficients& k,
                             const KktPoint& p) {
  return std::abs(rate_derivative(k, p.alpha) - p.lambda + p.mu);
}

}  // namespace vlcopt
