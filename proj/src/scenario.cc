#include "vlcopt/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vlcopt/errors.hpp"
#include "vlcopt/vlc_channel.hpp"

namespace vlcopt {

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ValidationError(path.empty() ? key : path + "." + key,
                            "unknown key");
    }
  }
}

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(path.empty() ? key : path + "." + key,
                          "missing required key");
  }
  return *it;
}

double number_at(const json& obj, const std::string& key,
                 const std::string& path) {
  const json& v = require(obj, key, path);
  const std::string field = path.empty() ? key : path + "." + key;
  if (!v.is_number()) throw ValidationError(field, "expected a number");
  double out = v.get<double>();
  if (!std::isfinite(out)) throw ValidationError(field, "must be finite");
  return out;
}

const json& object_at(const json& obj, const std::string& key,
                      const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_object()) {
    throw ValidationError(path.empty() ? key : path + "." + key,
                          "expected an object");
  }
  return v;
}

const json& array_at(const json& obj, const std::string& key,
                     const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_array()) {
    throw ValidationError(path.empty() ? key : path + "." + key,
                          "expected an array");
  }
  return v;
}

Point3 point_at(const json& obj, const std::string& key,
                const std::string& path) {
  const json& v = array_at(obj, key, path);
  const std::string field = path + "." + key;
  if (v.size() != 3) throw ValidationError(field, "expected [x, y, z]");
  double c[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_number()) {
      throw ValidationError(field + "[" + std::to_string(i) + "]",
                            "expected a number");
    }
    c[i] = v[i].get<double>();
  }
  return {c[0], c[1], c[2]};
}

std::string indexed(const char* list, std::size_t i) {
  return std::string(list) + "[" + std::to_string(i) + "]";
}

void check(bool ok, const std::string& field, const char* what) {
  if (!ok) throw ValidationError(field, what);
}

void check_position(const Point3& p, const Room& room,
                    const std::string& field) {
  check(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z), field,
        "coordinates must be finite");
  check(p.z >= 0.0, field, "z must be non-negative");
  check(p.x >= 0.0 && p.x <= room.x && p.y >= 0.0 && p.y <= room.y &&
            p.z <= room.z,
        field, "position outside room bounds");
}

}  // namespace

void validate(const Scenario& s) {
  check(s.room.x > 0.0 && std::isfinite(s.room.x), "room.x", "must be > 0");
  check(s.room.y > 0.0 && std::isfinite(s.room.y), "room.y", "must be > 0");
  check(s.room.z > 0.0 && std::isfinite(s.room.z), "room.z", "must be > 0");

  const SystemParams& p = s.params;
  check(p.vlc_bandwidth > 0.0, "params.B_v", "must be > 0");
  check(p.rf_bandwidth > 0.0, "params.B_r", "must be > 0");
  check(p.noise_psd > 0.0, "params.N0", "must be > 0");
  check(p.downlink_time > 0.0, "params.T_d", "must be > 0");
  check(p.uplink_time > 0.0, "params.T_u", "must be > 0");

  check(!s.aps.empty(), "aps", "at least one AP is required");
  check(!s.mts.empty(), "mts", "at least one MT is required");

  for (std::size_t i = 0; i < s.aps.size(); ++i) {
    const VlcAp& ap = s.aps[i];
    const std::string base = indexed("aps", i);
    check_position(ap.position, s.room, base + ".pos");
    check(ap.transmit_power >= 0.0, base + ".P_T", "must be >= 0");
    check(ap.half_angle > 0.0 && ap.half_angle < std::numbers::pi / 2,
          base + ".half_angle_deg", "must lie in (0, 90) degrees");
  }

  for (std::size_t j = 0; j < s.mts.size(); ++j) {
    const MobileTerminal& mt = s.mts[j];
    const std::string base = indexed("mts", j);
    check_position(mt.position, s.room, base + ".pos");
    check(mt.pd_area > 0.0, base + ".A", "must be > 0");
    check(mt.responsivity > 0.0, base + ".rho", "must be > 0");
    check(mt.filter_gain > 0.0, base + ".T_s", "must be > 0");
    check(mt.refractive_index >= 1.0, base + ".n_c", "must be >= 1");
    check(mt.fov > 0.0 && mt.fov <= std::numbers::pi / 2, base + ".fov_deg",
          "must lie in (0, 90] degrees");
    check(mt.conv_coeff > 0.0 && mt.conv_coeff <= 1.0, base + ".C_jRF",
          "must lie in (0, 1]");
    check(mt.oe_efficiency > 0.0 && mt.oe_efficiency <= 1.0, base + ".rho_j",
          "must lie in (0, 1]");
    check(mt.pathloss_exp > 0.0, base + ".pathloss_exp", "must be > 0");
    check(mt.rician_k >= 0.0, base + ".rician_K", "must be >= 0");
    check(mt.rician_omega > 0.0, base + ".rician_omega", "must be > 0");
    check(mt.rf_distance > 0.0, base + ".rf_distance", "must be > 0");
    for (std::size_t i = 0; i < s.aps.size(); ++i) {
      check(s.aps[i].position.z > mt.position.z, base + ".pos",
            "MT must lie below every AP");
    }
  }

  for (std::size_t k = 0; k < s.bandwidth_sweep.size(); ++k) {
    check(s.bandwidth_sweep[k] > 0.0 && std::isfinite(s.bandwidth_sweep[k]),
          "sweep.B_v[" + std::to_string(k) + "]", "must be > 0");
  }
}

Scenario load_scenario(std::string_view config_text) {
  json doc;
  try {
    doc = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("config must be a JSON object");

  reject_unknown_keys(doc, {"room", "params", "aps", "mts", "sweep"}, "");

  Scenario s;
  const json& room = object_at(doc, "room", "");
  reject_unknown_keys(room, {"x", "y", "z"}, "room");
  s.room = {number_at(room, "x", "room"), number_at(room, "y", "room"),
            number_at(room, "z", "room")};

  const json& params = object_at(doc, "params", "");
  reject_unknown_keys(params, {"B_v", "B_r", "N0", "T_d", "T_u"}, "params");
  s.params.vlc_bandwidth = number_at(params, "B_v", "params");
  s.params.rf_bandwidth = number_at(params, "B_r", "params");
  s.params.noise_psd = number_at(params, "N0", "params");
  s.params.downlink_time = number_at(params, "T_d", "params");
  s.params.uplink_time = number_at(params, "T_u", "params");

  const json& aps = array_at(doc, "aps", "");
  for (std::size_t i = 0; i < aps.size(); ++i) {
    const std::string base = indexed("aps", i);
    if (!aps[i].is_object()) throw ValidationError(base, "expected an object");
    reject_unknown_keys(aps[i], {"pos", "P_T", "half_angle_deg"}, base);
    VlcAp ap;
    ap.position = point_at(aps[i], "pos", base);
    ap.transmit_power = number_at(aps[i], "P_T", base);
    ap.half_angle = number_at(aps[i], "half_angle_deg", base) * kDegToRad;
    s.aps.push_back(ap);
  }

  const json& mts = array_at(doc, "mts", "");
  for (std::size_t j = 0; j < mts.size(); ++j) {
    const std::string base = indexed("mts", j);
    const json& m = mts[j];
    if (!m.is_object()) throw ValidationError(base, "expected an object");
    reject_unknown_keys(
        m,
        {"pos", "A", "rho", "T_s", "n_c", "fov_deg", "C_jRF", "rho_j",
         "pathloss_exp", "rician_K", "rician_omega", "rf_distance"},
        base);
    MobileTerminal mt;
    mt.position = point_at(m, "pos", base);
    mt.pd_area = number_at(m, "A", base);
    mt.responsivity = number_at(m, "rho", base);
    mt.filter_gain = number_at(m, "T_s", base);
    mt.refractive_index = number_at(m, "n_c", base);
    mt.fov = number_at(m, "fov_deg", base) * kDegToRad;
    mt.conv_coeff = number_at(m, "C_jRF", base);
    mt.oe_efficiency = number_at(m, "rho_j", base);
    mt.pathloss_exp = number_at(m, "pathloss_exp", base);
    mt.rician_k = number_at(m, "rician_K", base);
    mt.rician_omega = number_at(m, "rician_omega", base);
    mt.rf_distance = number_at(m, "rf_distance", base);
    s.mts.push_back(mt);
  }

  if (auto it = doc.find("sweep"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("sweep", "expected an object");
    reject_unknown_keys(*it, {"B_v"}, "sweep");
    const json& bw = array_at(*it, "B_v", "sweep");
    for (std::size_t k = 0; k < bw.size(); ++k) {
      if (!bw[k].is_number()) {
        throw ValidationError("sweep.B_v[" + std::to_string(k) + "]",
                              "expected a number");
      }
      s.bandwidth_sweep.push_back(bw[k].get<double>());
    }
  }

  validate(s);
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file: " + path);
  return load_scenario(buf.str());
}

LinkGeometry link_geometry(const VlcAp& ap, const MobileTerminal& mt) {
  const double dx = ap.position.x - mt.position.x;
  const double dy = ap.position.y - mt.position.y;
  const double dz = ap.position.z - mt.position.z;
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (d == 0.0) throw GeometryError("AP and MT are co-located");
  if (dz <= 0.0) throw GeometryError("AP must be above the MT");
  const double c = dz / d;
  return {d, c, c};
}

std::size_t associate(const Scenario& scenario, std::size_t mt_index) {
  if (mt_index >= scenario.mts.size()) {
    throw DomainError("MT index " + std::to_string(mt_index) +
                      " out of range");
  }
  const MobileTerminal& mt = scenario.mts[mt_index];
  std::size_t best = 0;
  double best_gain = -1.0;
  for (std::size_t i = 0; i < scenario.aps.size(); ++i) {
    const double g = channel_gain(scenario.aps[i], mt).value;
    if (g > best_gain) {
      best_gain = g;
      best = i;
    }
  }
  if (!(best_gain > 0.0)) {
    throw NoCoverageError("MT " + std::to_string(mt_index) +
                          " is outside the field of view of every AP");
  }
  return best;
}

}  // namespace vlcopt
