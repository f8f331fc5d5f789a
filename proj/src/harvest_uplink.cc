#include "vlcopt/harvest_uplink.hpp"

#include <cmath>
#include <numbers>

#include "vlcopt/errors.hpp"
#include "vlcopt/vlc_channel.hpp"

namespace vlcopt {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("time-splitting coefficient must lie in [0, 1]");
  }
}

// P^2 / d^4 * cos^(2m)(phi) for one AP seen from the MT.
double received_square_term(const VlcAp& ap, const MobileTerminal& mt) {
  const LinkGeometry geo = link_geometry(ap, mt);
  const double m = lambertian_order(ap.half_angle);
  const double d2 = geo.distance * geo.distance;
  return ap.transmit_power * ap.transmit_power / (d2 * d2) *
         std::pow(geo.cos_irradiance, 2.0 * m);
}

// log I0(x) for x >= 0. std::cyl_bessel_i overflows past ~700.
double log_bessel_i0(double x) {
  if (x < 600.0) return std::log(std::cyl_bessel_i(0.0, x));
  const double inv = 1.0 / (8.0 * x);
  return x - 0.5 * std::log(2.0 * std::numbers::pi * x) +
         std::log1p(inv + 4.5 * inv * inv);
}

}  // namespace

HarvestConstants harvest_constants(const Scenario& scenario,
                                   std::size_t mt_index,
                                   std::size_t serving_index) {
  if (mt_index >= scenario.mts.size() || serving_index >= scenario.aps.size()) {
    throw DomainError("MT or AP index out of range");
  }
  const MobileTerminal& mt = scenario.mts[mt_index];
  const double scale =
      mt.conv_coeff * scenario.params.downlink_time * mt.oe_efficiency;

  double others = 0.0;
  for (std::size_t k = 0; k < scenario.aps.size(); ++k) {
    if (k == serving_index) continue;
    others += received_square_term(scenario.aps[k], mt);
  }
  return {scale * received_square_term(scenario.aps[serving_index], mt),
          scale * others};
}

double harvested_energy(const HarvestConstants& consts, double alpha) {
  check_alpha(alpha);
  return (1.0 - alpha) * consts.serving + consts.interference;
}

double rician_pdf(double r, double k_factor, double omega) {
  if (!(r >= 0.0) || !(k_factor >= 0.0) || !(omega > 0.0)) {
    throw DomainError("rician_pdf requires r >= 0, K >= 0, omega > 0");
  }
  if (r == 0.0) return 0.0;
  const double kp1 = 1.0 + k_factor;
  const double arg = 2.0 * r * std::sqrt(k_factor * kp1 / omega);
  const double log_f = std::log(2.0 * r * kp1 / omega) - k_factor -
                       r * r * kp1 / omega + log_bessel_i0(arg);
  return std::exp(log_f);
}

RicianSampler::RicianSampler(double k_factor, double omega,
                             std::uint64_t seed, std::uint64_t stream)
    : los_(std::sqrt(k_factor)),
      scale_(std::sqrt(omega / (1.0 + k_factor))),
      normal_(0.0, std::sqrt(0.5)) {
  if (!(k_factor >= 0.0) || !(omega > 0.0)) {
    throw DomainError("Rician sampler requires K >= 0 and omega > 0");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double RicianSampler::operator()() {
  const double re = los_ + normal_(engine_);
  const double im = normal_(engine_);
  return scale_ * std::hypot(re, im);
}

double sample_rician(double k_factor, double omega, std::uint64_t seed) {
  RicianSampler sampler(k_factor, omega, seed);
  return sampler();
}

UplinkChannel draw_uplink_channel(const MobileTerminal& mt, std::uint64_t seed,
                                  std::uint64_t stream) {
  RicianSampler sampler(mt.rician_k, mt.rician_omega, seed, stream);
  return {sampler(), mt.rician_k, mt.rician_omega};
}

double uplink_snr(const HarvestConstants& consts, double alpha, double h_sq,
                  const MobileTerminal& mt, const SystemParams& params) {
  const double energy = harvested_energy(consts, alpha);
  return energy * h_sq / (params.uplink_time * params.noise_psd *
                          std::pow(mt.rf_distance, mt.pathloss_exp));
}

double uplink_rate(double snr, const SystemParams& params) {
  if (!(snr >= 0.0)) throw DomainError("uplink SNR must be >= 0");
  return params.rf_bandwidth * std::log2(1.0 + snr);
}

UplinkRate evaluate_uplink(const HarvestConstants& consts, double alpha,
                           double h_sq, const MobileTerminal& mt,
                           const SystemParams& params) {
  UplinkRate out;
  out.energy = harvested_energy(consts, alpha);
  out.power = out.energy / params.uplink_time;
  out.snr = uplink_snr(consts, alpha, h_sq, mt, params);
  out.rate = uplink_rate(out.snr, params);
  return out;
}

}  // namespace vlcopt
