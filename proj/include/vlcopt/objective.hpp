#pragma once

#include <cstddef>

#include "vlcopt/scenario.hpp"

namespace vlcopt {

// Scalar form of the joint rate
//   R(alpha) = alpha * b1 * log2(1 + a/(b + c))
//            + b2 * log2(1 + ((1 - alpha) d + e) / g).
struct ReducedCoefficients {
  double a = 0.0;   // P_i * G_ij
  double b = 0.0;   // N0 * B_v
  double c = 0.0;   // sum over in-FOV interferers of P_k * G_kj
  double d = 0.0;   // K1 * |h|^2
  double e = 0.0;   // K2 * |h|^2
  double g = 0.0;   // T_u * N0 * d_j^n
  double b1 = 0.0;  // B_v
  double b2 = 0.0;  // B_r
};

struct ObjectiveEval {
  double alpha = 0.0;
  double total = 0.0;          // R
  double downlink_rate = 0.0;  // unweighted R_d
  double downlink_term = 0.0;  // alpha * R_d
  double uplink_term = 0.0;    // R_u
};

/// Throws DomainError unless every coefficient is finite and non-negative
/// with b, g, b1, b2 strictly positive.
void check_coefficients(const ReducedCoefficients& coeffs);

ReducedCoefficients reduce(const Scenario& scenario, std::size_t mt_index,
                           std::size_t serving_index, double h_sq);

/// Slope of the downlink term, b1 * log2(1 + a/(b + c)).
double downlink_slope(const ReducedCoefficients& coeffs);

ObjectiveEval total_rate(const ReducedCoefficients& coeffs, double alpha);
double rate_derivative(const ReducedCoefficients& coeffs, double alpha);
double rate_second_derivative(const ReducedCoefficients& coeffs, double alpha);

// Same expressions without the [0, 1] check. The optimizer uses these to
// verify the stationary point by analytic continuation.
double rate_derivative_unchecked(const ReducedCoefficients& coeffs,
                                 double alpha);

}  // namespace vlcopt
