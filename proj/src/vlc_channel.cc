#include "vlcopt/vlc_channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vlcopt/errors.hpp"

namespace vlcopt {

double lambertian_order(double half_angle) {
  if (!(half_angle > 0.0 && half_angle < std::numbers::pi / 2)) {
    throw DomainError("half-power semi-angle must lie in (0, pi/2)");
  }
  return -1.0 / std::log2(std::cos(half_angle));
}

double concentrator_gain(double refractive_index, double fov) {
  if (!(refractive_index >= 1.0)) {
    throw DomainError("refractive index must be >= 1");
  }
  if (!(fov > 0.0 && fov <= std::numbers::pi / 2)) {
    throw DomainError("field of view must lie in (0, pi/2]");
  }
  const double s = std::sin(fov);
  return refractive_index * refractive_index / (s * s);
}

ChannelGain channel_gain(const VlcAp& ap, const MobileTerminal& mt) {
  const LinkGeometry geo = link_geometry(ap, mt);
  const double incidence = std::acos(geo.cos_incidence);
  if (incidence > mt.fov) return {0.0, false};

  const double m = lambertian_order(ap.half_angle);
  const double g = concentrator_gain(mt.refractive_index, mt.fov);
  const double value = (m + 1.0) * mt.pd_area * mt.responsivity *
                       std::pow(geo.cos_irradiance, m) * geo.cos_incidence *
                       mt.filter_gain * g /
                       (2.0 * std::numbers::pi * geo.distance * geo.distance);
  return {value, true};
}

DownlinkRate downlink_rate(const Scenario& scenario, std::size_t mt_index,
                           std::size_t serving_index) {
  if (mt_index >= scenario.mts.size() || serving_index >= scenario.aps.size()) {
    throw DomainError("MT or AP index out of range");
  }
  const MobileTerminal& mt = scenario.mts[mt_index];
  const VlcAp& serving = scenario.aps[serving_index];

  double interference = 0.0;
  for (std::size_t k = 0; k < scenario.aps.size(); ++k) {
    if (k == serving_index) continue;
    interference += scenario.aps[k].transmit_power *
                    channel_gain(scenario.aps[k], mt).value;
  }
  const double noise =
      scenario.params.noise_psd * scenario.params.vlc_bandwidth;
  const double signal = serving.transmit_power * channel_gain(serving, mt).value;

  DownlinkRate out;
  out.sinr = signal / (noise + interference);
  out.rate = scenario.params.vlc_bandwidth * std::log2(1.0 + out.sinr);
  return out;
}

}  // namespace vlcopt
