#include "vlcopt/objective.hpp"

#include <cmath>
#include <numbers>

#include "vlcopt/errors.hpp"
#include "vlcopt/harvest_uplink.hpp"
#include "vlcopt/vlc_channel.hpp"

namespace vlcopt {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("time-splitting coefficient must lie in [0, 1]");
  }
}

// g + d(1 - alpha) + e, the uplink SNR denominator scaled by g.
double uplink_level(const ReducedCoefficients& k, double alpha) {
  return k.g + k.d * (1.0 - alpha) + k.e;
}

}  // namespace

void check_coefficients(const ReducedCoefficients& k) {
  const double all[] = {k.a, k.b, k.c, k.d, k.e, k.g, k.b1, k.b2};
  for (double v : all) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("reduced coefficients must be finite and >= 0");
    }
  }
  if (!(k.b > 0.0 && k.g > 0.0 && k.b1 > 0.0 && k.b2 > 0.0)) {
    throw DomainError("b, g, b1 and b2 must be strictly positive");
  }
}

ReducedCoefficients reduce(const Scenario& scenario, std::size_t mt_index,
                           std::size_t serving_index, double h_sq) {
  if (mt_index >= scenario.mts.size() || serving_index >= scenario.aps.size()) {
    throw DomainError("MT or AP index out of range");
  }
  if (!(h_sq >= 0.0) || !std::isfinite(h_sq)) {
    throw DomainError("|h|^2 must be finite and >= 0");
  }
  const MobileTerminal& mt = scenario.mts[mt_index];
  const SystemParams& p = scenario.params;

  ReducedCoefficients k;
  k.a = scenario.aps[serving_index].transmit_power *
        channel_gain(scenario.aps[serving_index], mt).value;
  k.b = p.noise_psd * p.vlc_bandwidth;
  for (std::size_t i = 0; i < scenario.aps.size(); ++i) {
    if (i == serving_index) continue;
    k.c += scenario.aps[i].transmit_power *
           channel_gain(scenario.aps[i], mt).value;
  }
  const HarvestConstants h = harvest_constants(scenario, mt_index,
                                               serving_index);
  k.d = h.serving * h_sq;
  k.e = h.interference * h_sq;
  k.g = p.uplink_time * p.noise_psd * std::pow(mt.rf_distance, mt.pathloss_exp);
  k.b1 = p.vlc_bandwidth;
  k.b2 = p.rf_bandwidth;
  return k;
}

double downlink_slope(const ReducedCoefficients& k) {
  return k.b1 * std::log2(1.0 + k.a / (k.b + k.c));
}

ObjectiveEval total_rate(const ReducedCoefficients& k, double alpha) {
  check_alpha(alpha);
  ObjectiveEval out;
  out.alpha = alpha;
  out.downlink_rate = downlink_slope(k);
  out.downlink_term = alpha * out.downlink_rate;
  out.uplink_term = k.b2 * std::log2(1.0 + ((1.0 - alpha) * k.d + k.e) / k.g);
  out.total = out.downlink_term + out.uplink_term;
  return out;
}

double rate_derivative_unchecked(const ReducedCoefficients& k, double alpha) {
  return downlink_slope(k) -
         k.b2 * k.d / (std::numbers::ln2 * uplink_level(k, alpha));
}

double rate_derivative(const ReducedCoefficients& k, double alpha) {
  check_alpha(alpha);
  return rate_derivative_unchecked(k, alpha);
}

double rate_second_derivative(const ReducedCoefficients& k, double alpha) {
  check_alpha(alpha);
  if (k.d == 0.0) return 0.0;
  const double level = uplink_level(k, alpha);
  return -k.b2 * k.d * k.d / (std::numbers::ln2 * level * level);
}

}  // namespace vlcopt
