#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vlcopt {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Ceiling LED luminaire acting as a VLC access point. Always faces straight
// down.
struct VlcAp {
  Point3 position;
  double transmit_power = 0.0;  // W
  double half_angle = 0.0;      // rad, semi-angle at half illuminance
};

// Receiver side. The photodiode faces straight up; the RF uplink fields
// describe the channel towards the RF access point.
struct MobileTerminal {
  Point3 position;
  double pd_area = 0.0;          // m^2
  double responsivity = 0.0;     // scales optical channel gain
  double filter_gain = 1.0;      // optical filter T_s
  double refractive_index = 1.0; // concentrator n_c
  double fov = 0.0;              // rad
  double conv_coeff = 0.0;       // optical to RF power conversion C_jRF
  double oe_efficiency = 0.0;    // optical to electrical efficiency rho_j
  double pathloss_exp = 2.0;     // RF path-loss exponent
  double rician_k = 0.0;
  double rician_omega = 1.0;
  double rf_distance = 1.0;      // m, MT to RF access point
};

struct SystemParams {
  double vlc_bandwidth = 0.0;  // B_v, Hz
  double rf_bandwidth = 0.0;   // B_r, Hz
  double noise_psd = 0.0;      // N0, W/Hz
  double downlink_time = 0.0;  // T_d, s
  double uplink_time = 0.0;    // T_u, s
};

struct Room {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct Scenario {
  Room room;
  std::vector<VlcAp> aps;
  std::vector<MobileTerminal> mts;
  SystemParams params;
  // Optional list of VLC bandwidths used by the convergence study; empty when
  // the config has no "sweep" section.
  std::vector<double> bandwidth_sweep;
};

struct LinkGeometry {
  double distance = 0.0;
  double cos_irradiance = 0.0;
  double cos_incidence = 0.0;
};

// Parses and validates a JSON scenario. Throws ParseError on malformed text
// and ValidationError (carrying the field path) on any invariant violation.
Scenario load_scenario(std::string_view config_text);

// Reads `path` and forwards to load_scenario. Throws IoError if unreadable.
Scenario load_scenario_file(const std::string& path);

// Re-checks every invariant of an in-memory scenario.
void validate(const Scenario& scenario);

LinkGeometry link_geometry(const VlcAp& ap, const MobileTerminal& mt);

// Index of the AP with the strongest LOS gain towards mts[mt_index]. Ties go
// to the lowest index. Throws NoCoverageError when every gain is zero.
std::size_t associate(const Scenario& scenario, std::size_t mt_index);

}  // namespace vlcopt
