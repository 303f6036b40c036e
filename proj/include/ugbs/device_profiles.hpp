#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ugbs/errors.hpp"

namespace ugbs {

enum class DeviceClass { RfidUhf, AiotBl, AiotBa, AiotBsa };

inline std::string to_string(DeviceClass cls) {
  switch (cls) {
    case DeviceClass::RfidUhf: return "RFID-UHF";
    case DeviceClass::AiotBl: return "AIOT-BL";
    case DeviceClass::AiotBa: return "AIOT-BA";
    case DeviceClass::AiotBsa: return "AIOT-BSA";
  }
  throw ConfigError("unknown device class");
}

inline DeviceClass device_class_from_string(std::string_view name) {
  if (name == "RFID-UHF") return DeviceClass::RfidUhf;
  if (name == "AIOT-BL") return DeviceClass::AiotBl;
  if (name == "AIOT-BA") return DeviceClass::AiotBa;
  if (name == "AIOT-BSA") return DeviceClass::AiotBsa;
  throw ConfigError("unknown device class '" + std::string(name) +
                    "' (expected RFID-UHF, AIOT-BL, AIOT-BA or AIOT-BSA)");
}

struct RangePair {
  double lo = 0.0;
  double hi = 0.0;
};

/// Radio and power characteristics of one tag class.
struct DeviceProfile {
  std::string name;
  DeviceClass device_class = DeviceClass::RfidUhf;
  double max_power_w = 0.0;        // device power-consumption class
  double tx_power_dbm = 30.0;      // exciter transmit power used with this class
  double activation_threshold_dbm = -10.0;
  double sensitivity_dbm = -75.0;  // reader sensitivity
  double modulation_factor = 0.33;
  RangePair data_rate_kbps;
  std::string complexity_note;
};

/// Fraction of incident RF power a typical ambient harvester converts;
/// recorded for documentation, no computation consumes it.
inline constexpr double kRfHarvestingEfficiency = 0.182;

/// Immutable preset for a device class. The A-IoT classes share one set of
/// link parameters; BA has no published numbers of its own, so it reuses the
/// BL radio values with an interpolated power cap.
inline DeviceProfile preset(DeviceClass cls) {
  DeviceProfile p;
  p.device_class = cls;
  p.name = to_string(cls);
  switch (cls) {
    case DeviceClass::RfidUhf:
      p.max_power_w = 10e-6;
      p.tx_power_dbm = 30.0;
      p.activation_threshold_dbm = -10.0;
      p.sensitivity_dbm = -75.0;
      p.modulation_factor = 0.33;  // OOK
      p.data_rate_kbps = {40.0, 640.0};
      p.complexity_note = "UHF RFID ISO18000-6C (EPC C1G2) reference device";
      return p;
    case DeviceClass::AiotBl:
      p.max_power_w = 10e-6;
      p.complexity_note = "Comparable to UHF RFID ISO18000-6C (EPC C1G2)";
      break;
    case DeviceClass::AiotBa:
      p.max_power_w = 1e-3;  // between BL and BSA caps; interpolated preset
      p.complexity_note = "Between BL and BSA devices (interpolated preset)";
      break;
    case DeviceClass::AiotBsa:
      p.max_power_w = 10e-3;
      p.complexity_note = "Much lower than NB-IoT devices";
      break;
  }
  p.tx_power_dbm = 24.0;
  p.activation_threshold_dbm = -25.0;
  p.sensitivity_dbm = -100.0;
  p.modulation_factor = 0.25;
  p.data_rate_kbps = {0.1, 5.0};
  return p;
}

inline DeviceProfile preset(std::string_view name) {
  return preset(device_class_from_string(name));
}

/// One row of the IoT network-architecture comparison.
struct ArchitectureRow {
  std::string name;
  double max_power_w = 0.0;
  RangePair coverage_m;      // rural/outdoor figure
  RangePair data_rate_kbps;
};

inline std::vector<ArchitectureRow> architecture_table() {
  return {
      {"LoRaWAN", 25e-3, {10000.0, 15000.0}, {0.3, 5.5}},
      {"NB-IoT", 200e-3, {5000.0, 15000.0}, {250.0, 250.0}},
      {"Active A-IoT", 10e-3, {500.0, 500.0}, {5.0, 5.0}},
      {"Battery-free A-IoT", 10e-6, {500.0, 500.0}, {5.0, 5.0}},
  };
}

enum class Environment { Indoor, Outdoor };

/// Deployment-density limit in devices per 100 m^2.
inline int density_limit_per_100m2(Environment env) {
  return env == Environment::Indoor ? 150 : 20;
}

struct DensityCheck {
  bool pass = false;
  int limit_per_100m2 = 0;
  double max_devices = 0.0;  // binding limit for the queried area
};

inline DensityCheck density_check(long device_count, double area_m2,
                                  Environment env) {
  if (!(area_m2 > 0.0)) throw ConfigError("density check: area must be > 0");
  if (device_count < 0) throw ConfigError("density check: count must be >= 0");
  DensityCheck result;
  result.limit_per_100m2 = density_limit_per_100m2(env);
  result.max_devices = result.limit_per_100m2 * area_m2 / 100.0;
  // Compare in the per-100-m^2 domain so the published boundary is exact.
  result.pass = static_cast<double>(device_count) * 100.0 <=
                static_cast<double>(result.limit_per_100m2) * area_m2;
  return result;
}

/// Supported coverage range in meters.
inline RangePair coverage_envelope(Environment env) {
  return env == Environment::Indoor ? RangePair{10.0, 50.0}
                                    : RangePair{50.0, 500.0};
}

}  // namespace ugbs
