#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "vlcopt/scenario.hpp"

namespace vlcopt {

// Harvested energy is E_H(alpha) = (1 - alpha) * serving + interference.
struct HarvestConstants {
  double serving = 0.0;       // K1, J
  double interference = 0.0;  // K2, J
};

struct UplinkChannel {
  double magnitude = 0.0;  // |h|
  double k_factor = 0.0;
  double omega = 1.0;
};

struct UplinkRate {
  double energy = 0.0;  // E_H, J
  double power = 0.0;   // P_H = E_H / T_u, W
  double snr = 0.0;
  double rate = 0.0;    // bit/s
};

HarvestConstants harvest_constants(const Scenario& scenario,
                                   std::size_t mt_index,
                                   std::size_t serving_index);

double harvested_energy(const HarvestConstants& consts, double alpha);

/// Rician envelope density with factor K and mean-square value omega.
double rician_pdf(double r, double k_factor, double omega);

/// Draws Rician envelopes |h| = sqrt(omega/(1+K)) * |sqrt(K) + z| with z a
/// unit-power circular complex Gaussian. The engine is derived from
/// (seed, stream), so independent workers can share one master seed.
class RicianSampler {
 public:
  RicianSampler(double k_factor, double omega, std::uint64_t seed,
                std::uint64_t stream = 0);

  double operator()();

 private:
  double los_;
  double scale_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// First envelope drawn from stream 0 of `seed`.
double sample_rician(double k_factor, double omega, std::uint64_t seed);

/// One fading realisation of the MT's uplink, drawn from (seed, stream).
UplinkChannel draw_uplink_channel(const MobileTerminal& mt, std::uint64_t seed,
                                  std::uint64_t stream = 0);

double uplink_snr(const HarvestConstants& consts, double alpha, double h_sq,
                  const MobileTerminal& mt, const SystemParams& params);

/// Shannon rate of the RF uplink over B_r.
double uplink_rate(double snr, const SystemParams& params);

/// E_H, P_H, SNR and rate at one time-splitting value.
UplinkRate evaluate_uplink(const HarvestConstants& consts, double alpha,
                           double h_sq, const MobileTerminal& mt,
                           const SystemParams& params);

}  // namespace vlcopt
