#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ugbs/device_profiles.hpp"
#include "ugbs/soil_channel.hpp"

namespace ugbs {

/// Backscatter budget parameters, all losses handled as positive dB.
struct LinkParams {
  double tx_power_dbm = 30.0;          // P_T
  double tx_gain_dbi = 6.0;            // G_T
  double reader_gain_dbi = 6.0;        // G_R
  double tag_gain_dbi = -1.0;          // G_tag
  double modulation_factor = 0.33;     // M, linear power factor in (0,1]
  double activation_threshold_dbm = -10.0;  // P_thr
  double reader_sensitivity_dbm = -75.0;    // S
  double gamma = 3.0;                  // above-ground path-loss exponent

  void validate() const {
    if (!(modulation_factor > 0.0 && modulation_factor <= 1.0))
      throw ConfigError("link: modulation factor must be in (0,1]");
    if (!(gamma >= 2.0)) throw ConfigError("link: path-loss exponent must be >= 2");
    if (!(activation_threshold_dbm > reader_sensitivity_dbm))
      throw ConfigError("link: activation threshold must exceed reader sensitivity");
  }
};

/// Link parameters for a device preset with the shared 6 dBi reader antennas,
/// -1 dBi tag antenna and exponent-3 above-ground segment.
inline LinkParams link_params_for(const DeviceProfile& profile) {
  LinkParams link;
  link.tx_power_dbm = profile.tx_power_dbm;
  link.tx_gain_dbi = 6.0;
  link.reader_gain_dbi = 6.0;
  link.tag_gain_dbi = -1.0;
  link.modulation_factor = profile.modulation_factor;
  link.activation_threshold_dbm = profile.activation_threshold_dbm;
  link.reader_sensitivity_dbm = profile.sensitivity_dbm;
  link.gamma = 3.0;
  return link;
}

enum class Topology { Monostatic, Bistatic };

inline std::string to_string(Topology t) {
  return t == Topology::Monostatic ? "monostatic" : "bistatic";
}

/// Exciter/reader placement. Monostatic uses the exciter geometry for both
/// links. Bistatic fixes the exciter offset and solves the reader offset.
struct Configuration {
  Topology kind = Topology::Monostatic;
  LinkGeometry exciter;
  LinkGeometry reader;

  void validate(const LinkParams& link) const {
    exciter.validate();
    if (kind == Topology::Bistatic) {
      reader.validate();
      if (reader.frequency_hz != exciter.frequency_hz)
        throw ConfigError("configuration: exciter and reader must share a carrier");
    } else if (link.tx_gain_dbi != link.reader_gain_dbi) {
      throw ConfigError("configuration: monostatic requires G_T = G_R");
    }
  }
};

enum class LinkSide { Downlink, Uplink };

inline std::string to_string(LinkSide side) {
  return side == LinkSide::Downlink ? "DL" : "UL";
}

struct RangeReport {
  double activation_m = 0.0;    // d_act
  double read_m = 0.0;          // d_read
  LinkSide limiting_link = LinkSide::Downlink;
  double effective_range_m = 0.0;  // min(d_act, d_read)
};

/// Tag power after the downlink: P_T + G_T + G_tag - L_AG2UG.
inline double tag_received_power_dbm(const LinkParams& link, double dl_loss_db) {
  if (dl_loss_db < 0.0) throw ConfigError("link: downlink loss must be >= 0 dB");
  return link.tx_power_dbm + link.tx_gain_dbi + link.tag_gain_dbi - dl_loss_db;
}

/// Reader power after the backscatter uplink:
/// P_rx_tag + G_tag + G_R + 10*log10(M) - L_UG2AG.
inline double reader_received_power_dbm(double tag_rx_dbm, const LinkParams& link,
                                        double ul_loss_db) {
  if (ul_loss_db < 0.0) throw ConfigError("link: uplink loss must be >= 0 dB");
  return tag_rx_dbm + link.tag_gain_dbi + link.reader_gain_dbi +
         10.0 * std::log10(link.modulation_factor) - ul_loss_db;
}

inline constexpr double kSolverBracketM = 10000.0;
inline constexpr double kSolverToleranceM = 1e-3;
inline constexpr double kSolverToleranceDb = 0.005;

namespace detail {

// Largest offset with received(x) >= threshold, for strictly decreasing
// received(x). Returns the feasible end of the final bracket, so the
// returned point always meets the threshold and sits at most one tolerance
// step inside the true crossing.
template <typename F>
double solve_threshold_crossing(F&& received_dbm, double threshold_dbm,
                                const std::string& what) {
  double lo = 0.0;
  double received_lo = received_dbm(lo);
  if (received_lo < threshold_dbm) {
    throw NoSolutionError(what + ": infeasible even at zero offset (" +
                          std::to_string(received_lo) + " dBm against threshold " +
                          std::to_string(threshold_dbm) + " dBm)");
  }
  double hi = kSolverBracketM;
  if (received_dbm(hi) >= threshold_dbm) {
    throw NoSolutionError(what + ": crossing lies beyond the " +
                          std::to_string(kSolverBracketM / 1000.0) +
                          " km search bracket");
  }
  for (int i = 0; i < 200; ++i) {
    if (hi - lo <= kSolverToleranceM &&
        received_lo - threshold_dbm <= kSolverToleranceDb)
      break;
    const double mid = 0.5 * (lo + hi);
    const double received_mid = received_dbm(mid);
    if (received_mid >= threshold_dbm) {
      lo = mid;
      received_lo = received_mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

inline LinkGeometry with_offset(LinkGeometry geometry, double offset_m) {
  geometry.horizontal_offset_m = offset_m;
  return geometry;
}

}  // namespace detail

/// Farthest horizontal offset at which the tag still wakes up.
inline double activation_distance_m(const LinkParams& link, const SoilProfile& soil,
                                    const LinkGeometry& base_geometry) {
  link.validate();
  base_geometry.validate();
  const ChannelContext ctx =
      make_channel_context(soil, base_geometry.frequency_hz, link.gamma);
  return detail::solve_threshold_crossing(
      [&](double x) {
        return tag_received_power_dbm(
            link, composite_path_loss_db(ctx, detail::with_offset(base_geometry, x),
                                         LinkDirection::Ag2Ug));
      },
      link.activation_threshold_dbm, "activation distance");
}

/// Farthest offset at which the backscattered signal still meets the reader
/// sensitivity. Monostatic moves exciter and reader together; bistatic keeps
/// the exciter at its configured offset and moves only the reader.
inline double read_distance_m(const LinkParams& link, const SoilProfile& soil,
                              const Configuration& config) {
  link.validate();
  config.validate(link);
  const ChannelContext exciter_ctx =
      make_channel_context(soil, config.exciter.frequency_hz, link.gamma);
  if (config.kind == Topology::Monostatic) {
    return detail::solve_threshold_crossing(
        [&](double x) {
          const LinkGeometry geometry = detail::with_offset(config.exciter, x);
          const double tag_rx = tag_received_power_dbm(
              link,
              composite_path_loss_db(exciter_ctx, geometry, LinkDirection::Ag2Ug));
          return reader_received_power_dbm(
              tag_rx, link,
              composite_path_loss_db(exciter_ctx, geometry, LinkDirection::Ug2Ag));
        },
        link.reader_sensitivity_dbm, "read distance");
  }
  const double tag_rx = tag_received_power_dbm(
      link,
      composite_path_loss_db(exciter_ctx, config.exciter, LinkDirection::Ag2Ug));
  if (tag_rx < link.activation_threshold_dbm) {
    throw InfeasibleExcitationError(
        "bistatic exciter offset " +
        std::to_string(config.exciter.horizontal_offset_m) +
        " m exceeds the activation distance");
  }
  const ChannelContext reader_ctx =
      make_channel_context(soil, config.reader.frequency_hz, link.gamma);
  return detail::solve_threshold_crossing(
      [&](double x) {
        return reader_received_power_dbm(
            tag_rx, link,
            composite_path_loss_db(reader_ctx, detail::with_offset(config.reader, x),
                                   LinkDirection::Ug2Ag));
      },
      link.reader_sensitivity_dbm, "read distance");
}

/// Activation and read distances plus the binding link. Ties at solver
/// resolution report the downlink.
inline RangeReport solve_range(const LinkParams& link, const SoilProfile& soil,
                               const Configuration& config) {
  RangeReport report;
  report.activation_m = activation_distance_m(link, soil, config.exciter);
  report.read_m = read_distance_m(link, soil, config);
  report.limiting_link = report.read_m < report.activation_m - kSolverToleranceM
                             ? LinkSide::Uplink
                             : LinkSide::Downlink;
  report.effective_range_m = std::min(report.activation_m, report.read_m);
  return report;
}

/// One row of a moisture sweep. Missing distances mark infeasible links.
struct SweepPoint {
  double vwc = 0.0;
  std::optional<double> activation_m;
  std::optional<double> read_m;
  std::optional<LinkSide> limiting_link;
  std::optional<double> effective_range_m;
};

/// Evaluates the budget across a moisture range, endpoints included.
inline std::vector<SweepPoint> sweep_vwc(const LinkParams& link,
                                         const SoilProfile& soil_base,
                                         double vwc_lo, double vwc_hi, int steps,
                                         const Configuration& config) {
  if (!(vwc_lo >= 0.0 && vwc_lo < vwc_hi && vwc_hi <= 1.0))
    throw ConfigError("sweep: need 0 <= vwc_lo < vwc_hi <= 1");
  if (steps < 2) throw ConfigError("sweep: need at least 2 steps");
  std::vector<SweepPoint> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    SoilProfile soil = soil_base;
    soil.vwc = i == steps - 1
                   ? vwc_hi
                   : vwc_lo + (vwc_hi - vwc_lo) * i / (steps - 1);
    SweepPoint row;
    row.vwc = soil.vwc;
    try {
      const RangeReport report = solve_range(link, soil, config);
      row.activation_m = report.activation_m;
      row.read_m = report.read_m;
      row.limiting_link = report.limiting_link;
      row.effective_range_m = report.effective_range_m;
    } catch (const NoSolutionError&) {
      // Row stays marked infeasible; partial feasibility is still reported.
      try {
        row.activation_m = activation_distance_m(link, soil, config.exciter);
      } catch (const NoSolutionError&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ugbs
