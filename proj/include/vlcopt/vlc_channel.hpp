#pragma once

#include <cstddef>

#include "vlcopt/scenario.hpp"

namespace vlcopt {

struct ChannelGain {
  double value = 0.0;  // 0 whenever in_fov is false
  bool in_fov = false;
};

struct DownlinkRate {
  double sinr = 0.0;
  double rate = 0.0;  // bit/s
};

/// Lambertian emission order m = -1 / log2(cos(half_angle)).
/// Throws DomainError unless 0 < half_angle < pi/2.
double lambertian_order(double half_angle);

/// Optical concentrator gain n_c^2 / sin^2(fov).
double concentrator_gain(double refractive_index, double fov);

/// Line-of-sight Lambertian DC gain from `ap` to `mt`, zero outside the
/// receiver field of view.
ChannelGain channel_gain(const VlcAp& ap, const MobileTerminal& mt);

/// SINR and rate of the VLC downlink from the serving AP. Noise is N0*B_v and
/// every other AP inside the receiver FOV interferes with power P_k*G_kj.
DownlinkRate downlink_rate(const Scenario& scenario, std::size_t mt_index,
                           std::size_t serving_index);

}  // namespace vlcopt
