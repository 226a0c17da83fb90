#pragma once

#include <cstddef>

namespace padplace {

/// UAV and sensor-node energy parameters.
///
/// `e_max` defaults to 7.8e4 J. The remaining defaults are
/// a calibration: they make the charging radius 2828.0 m, so a square cell of
/// side ~4000 m is covered by one disk at the cell center.
struct UavParams {
  double e_max = 78000.0;   ///< battery capacity, J
  double v_u = 10.0;        ///< cruise speed, m/s (calibrated)
  double p_mov = 120.0;     ///< moving power, W (calibrated)
  double p_blade = 80.0;    ///< blade-profile hover power, W (calibrated)
  double p_induced = 70.0;  ///< induced hover power, W (calibrated)
  double delta = 60.0;      ///< time to fully charge one node, s (calibrated)
  double e_node = 338.4;    ///< node battery capacity, J (calibrated)
  double eta = 0.3;         ///< wireless transfer efficiency (calibrated)

  /// Throws InfeasibleParams unless every field is positive, eta <= 1 and
  /// the battery leaves a positive charging radius.
  void validate() const;
};

struct FlightEnergy {
  double e_mov = 0.0;
  double e_hov = 0.0;
  double e_charge = 0.0;
  double e_consume = 0.0;
};

/// P_hov = P_0 + P_i.
double hover_power(const UavParams& params);

/// Energy of one charging flight with `t_m` seconds of travel, `n_charged`
/// nodes charged and `e_rec` joules delivered to them.
FlightEnergy flight_energy(const UavParams& params, double t_m, std::size_t n_charged,
                           double e_rec);

/// Maximum flight distance on a full battery: e_max / p_mov * v_u.
double d_max(const UavParams& params);

/// Charging coverage radius:
///   (e_max - p_hov * delta - e_node / eta) / p_mov * v_u / 2.
/// Throws InfeasibleParams when the energy budget is not positive.
double d_cover(const UavParams& params);

}  // namespace padplace
