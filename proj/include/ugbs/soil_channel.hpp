#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "ugbs/constants.hpp"
#include "ugbs/errors.hpp"

namespace ugbs {

/// Soil composition and moisture state driving permittivity and loss.
struct SoilProfile {
  double vwc = 0.15;             // volumetric water content, fraction of volume
  double clay_fraction = 0.30;   // mass fraction
  double sand_fraction = 0.50;   // mass fraction
  double bulk_density = 1.5;     // g/cm^3
  double particle_density = 2.66;  // g/cm^3

  void validate() const {
    if (!(vwc >= 0.0 && vwc <= 1.0))
      throw ConfigError("soil: vwc must be in [0,1]");
    if (!(clay_fraction >= 0.0 && sand_fraction >= 0.0 &&
          clay_fraction + sand_fraction <= 1.0))
      throw ConfigError("soil: clay and sand fractions must be >= 0 and sum to <= 1");
    if (!(bulk_density > 0.0 && particle_density > 0.0 &&
          bulk_density < particle_density))
      throw ConfigError("soil: need 0 < bulk_density < particle_density");
  }
};

/// Silty-clay-loam composition at the given moisture.
inline SoilProfile default_soil(double vwc) {
  return SoilProfile{vwc, 0.30, 0.50, 1.5, 2.66};
}

/// Relative complex permittivity eps_real - j*eps_imag.
struct ComplexPermittivity {
  double real = 1.0;  // >= 1
  double imag = 0.0;  // >= 0 (loss part)

  void validate() const {
    if (!(real >= 1.0) || !(imag >= 0.0))
      throw ConfigError("permittivity: need real >= 1 and imag >= 0");
  }
};

/// One side of the link: antenna height, tag burial depth, horizontal
/// separation between antenna and tag, carrier frequency.
struct LinkGeometry {
  double tx_height_m = 0.3;
  double tag_depth_m = 0.025;
  double horizontal_offset_m = 0.0;
  double frequency_hz = kDefaultFrequencyHz;

  void validate() const {
    if (!(tx_height_m >= 0.0) || !(tag_depth_m >= 0.0) ||
        !(horizontal_offset_m >= 0.0))
      throw ConfigError("geometry: heights, depths and offsets must be >= 0");
    if (!(frequency_hz > 0.0)) throw ConfigError("geometry: frequency must be > 0");
  }
};

enum class LinkDirection { Ag2Ug, Ug2Ag };

// Peplinski semi-empirical dielectric model validity band.
inline constexpr double kDielectricModelMinHz = 0.3e9;
inline constexpr double kDielectricModelMaxHz = 1.3e9;

namespace detail {

// Debye parameters of free water near room temperature.
inline constexpr double kEpsWater0 = 80.1;
inline constexpr double kEpsWaterInf = 4.9;
inline constexpr double kTwoPiTauWater = 0.58e-10;  // s

}  // namespace detail

/// Complex relative permittivity of moist soil after Peplinski, Ulaby &
/// Dobson (1995, corrected 1997). Valid for 0.3-1.3 GHz.
inline ComplexPermittivity soil_complex_permittivity(const SoilProfile& soil,
                                                     double frequency_hz) {
  soil.validate();
  if (!(frequency_hz >= kDielectricModelMinHz &&
        frequency_hz <= kDielectricModelMaxHz)) {
    throw ModelRangeError(
        "soil dielectric model is valid for 0.3-1.3 GHz only; got " +
        std::to_string(frequency_hz / 1e9) + " GHz");
  }
  const double sand = soil.sand_fraction;
  const double clay = soil.clay_fraction;
  const double rho_b = soil.bulk_density;
  const double rho_s = soil.particle_density;
  const double mv = soil.vwc;

  constexpr double alpha = 0.65;
  const double beta_r = 1.2748 - 0.519 * sand - 0.152 * clay;
  const double beta_i = 1.33797 - 0.603 * sand - 0.166 * clay;
  const double sigma_eff = 0.0467 + 0.2204 * rho_b - 0.4111 * sand + 0.6614 * clay;
  const double eps_solid = std::pow(1.01 + 0.44 * rho_s, 2.0) - 0.062;

  const double x = frequency_hz * detail::kTwoPiTauWater;  // 2*pi*f*tau_w
  const double eps_fw_real =
      detail::kEpsWaterInf +
      (detail::kEpsWater0 - detail::kEpsWaterInf) / (1.0 + x * x);

  ComplexPermittivity eps;
  eps.real = 1.15 * std::pow(1.0 +
                                 (rho_b / rho_s) * (std::pow(eps_solid, alpha) - 1.0) +
                                 std::pow(mv, beta_r) * std::pow(eps_fw_real, alpha) -
                                 mv,
                             1.0 / alpha) -
             0.68;
  if (mv > 0.0) {
    const double eps_fw_imag =
        x * (detail::kEpsWater0 - detail::kEpsWaterInf) / (1.0 + x * x) +
        sigma_eff * (rho_s - rho_b) /
            (2.0 * kPi * frequency_hz * kVacuumPermittivity * rho_s * mv);
    eps.imag = std::pow(std::pow(mv, beta_i) * std::pow(eps_fw_imag, alpha),
                        1.0 / alpha);
  }
  return eps;
}

/// Attenuation [Np/m] and phase [rad/m] constants of a plane wave in the
/// lossy dielectric.
struct PropagationConstants {
  double alpha_np_m = 0.0;
  double beta_rad_m = 0.0;
};

inline PropagationConstants propagation_constants(const ComplexPermittivity& eps,
                                                  double frequency_hz) {
  eps.validate();
  const double omega = 2.0 * kPi * frequency_hz;
  const double mu_eps = kVacuumPermeability * kVacuumPermittivity * eps.real;
  const double loss_tangent = eps.imag / eps.real;
  const double root = std::sqrt(1.0 + loss_tangent * loss_tangent);
  PropagationConstants pc;
  pc.alpha_np_m = omega * std::sqrt(mu_eps * (root - 1.0) / 2.0);
  pc.beta_rad_m = omega * std::sqrt(mu_eps * (root + 1.0) / 2.0);
  return pc;
}

/// Modified-Friis underground loss over a soil path of length d:
/// 20*log10(4*pi*d/lambda_soil) spreading plus alpha-driven attenuation.
/// Clamped at 0 dB; the spreading term turns negative only for paths well
/// inside the near field where the model does not apply.
inline double underground_path_loss_db(const PropagationConstants& pc,
                                       double distance_m) {
  if (distance_m < 0.0) throw ConfigError("underground path length must be >= 0");
  if (distance_m == 0.0) return 0.0;
  const double spreading = 20.0 * std::log10(2.0 * distance_m * pc.beta_rad_m);
  const double attenuation = kDbPerNeper * pc.alpha_np_m * distance_m;
  return std::max(0.0, spreading + attenuation);
}

/// Fresnel power-transmission loss of the air/soil boundary at normal
/// incidence. Direction matters for lossy soil: the Poynting-flux ratio
/// carries the complex intrinsic impedance of the incident medium.
inline double refraction_loss_db(const ComplexPermittivity& eps,
                                 LinkDirection direction) {
  eps.validate();
  // Soil intrinsic impedance normalised by eta0 is 1/n with n = sqrt(eps_c).
  const std::complex<double> n = std::sqrt(std::complex<double>(eps.real, -eps.imag));
  const std::complex<double> zeta = 1.0 / n;
  const double denom = std::norm(1.0 + zeta);
  const double transmitted = direction == LinkDirection::Ag2Ug
                                 ? 4.0 * zeta.real() / denom
                                 : 4.0 * std::norm(zeta) / (zeta.real() * denom);
  return std::max(0.0, -10.0 * std::log10(transmitted));
}

/// Log-distance above-ground loss anchored to free space at 1 m. Reduces to
/// exact Friis for exponent 2.
inline double above_ground_path_loss_db(double distance_m, double frequency_hz,
                                        double gamma) {
  if (distance_m < 0.0) throw ConfigError("above-ground path length must be >= 0");
  if (distance_m == 0.0) return 0.0;
  const double reference = 20.0 * std::log10(4.0 * kPi / wavelength_m(frequency_hz));
  return reference + 10.0 * gamma * std::log10(distance_m);
}

/// Air and soil lengths of the straight Tx-tag segment split at its surface
/// crossing. No Snell bending: at the 2.5 cm burial depths of interest the
/// soil leg is nearly vertical, so the normal-incidence split is used.
struct PathSegments {
  double air_m = 0.0;
  double soil_m = 0.0;
};

inline PathSegments split_ray(const LinkGeometry& geometry) {
  geometry.validate();
  const double total = geometry.tx_height_m + geometry.tag_depth_m;
  if (total <= 0.0) return {geometry.horizontal_offset_m, 0.0};
  const double air_fraction = geometry.tx_height_m / total;
  PathSegments segments;
  segments.air_m = std::hypot(geometry.horizontal_offset_m * air_fraction,
                              geometry.tx_height_m);
  segments.soil_m = std::hypot(geometry.horizontal_offset_m * (1.0 - air_fraction),
                               geometry.tag_depth_m);
  return segments;
}

/// Precomputed soil-dependent quantities; lets sweeps and solvers evaluate
/// many geometries without recomputing the dielectric model.
struct ChannelContext {
  ComplexPermittivity eps;
  PropagationConstants constants;
  double refraction_down_db = 0.0;  // air -> soil
  double refraction_up_db = 0.0;    // soil -> air
  double frequency_hz = kDefaultFrequencyHz;
  double gamma = 3.0;
};

inline ChannelContext make_channel_context(const SoilProfile& soil,
                                           double frequency_hz, double gamma) {
  ChannelContext ctx;
  ctx.eps = soil_complex_permittivity(soil, frequency_hz);
  ctx.constants = propagation_constants(ctx.eps, frequency_hz);
  ctx.refraction_down_db = refraction_loss_db(ctx.eps, LinkDirection::Ag2Ug);
  ctx.refraction_up_db = refraction_loss_db(ctx.eps, LinkDirection::Ug2Ag);
  ctx.frequency_hz = frequency_hz;
  ctx.gamma = gamma;
  return ctx;
}

inline double composite_path_loss_db(const ChannelContext& ctx,
                                     const LinkGeometry& geometry,
                                     LinkDirection direction) {
  const PathSegments segments = split_ray(geometry);
  const double refraction = direction == LinkDirection::Ag2Ug
                                ? ctx.refraction_down_db
                                : ctx.refraction_up_db;
  return above_ground_path_loss_db(segments.air_m, ctx.frequency_hz, ctx.gamma) +
         underground_path_loss_db(ctx.constants, segments.soil_m) + refraction;
}

/// Total AG2UG / UG2AG loss: above-ground segment with the given exponent,
/// modified-Friis soil segment, and the directional boundary loss.
inline double composite_path_loss_db(const LinkGeometry& geometry,
                                     const SoilProfile& soil,
                                     LinkDirection direction, double gamma) {
  geometry.validate();
  return composite_path_loss_db(
      make_channel_context(soil, geometry.frequency_hz, gamma), geometry,
      direction);
}

}  // namespace ugbs
