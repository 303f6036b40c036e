#pragma once

#include <cmath>
#include <numbers>

namespace ugbs {

inline constexpr double kSpeedOfLight = 299792458.0;          // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kVacuumPermeability = 1.25663706212e-6;  // H/m
inline constexpr double kPi = std::numbers::pi;

// 20/ln(10): converts field attenuation in Np/m to power loss in dB/m.
inline constexpr double kDbPerNeper = 8.685889638065035;

inline constexpr double kDefaultFrequencyHz = 915e6;  // UHF RFID band

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

inline double wavelength_m(double frequency_hz) {
  return kSpeedOfLight / frequency_hz;
}

}  // namespace ugbs
