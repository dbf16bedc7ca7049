#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "airkit/capacity/separation.hpp"
#include "airkit/core/geo.hpp"

namespace airkit::cap {

inline long long round_half_up(double x) {
  return static_cast<long long>(std::floor(x + 0.5));
}

/// Exact headway in seconds between two movements separated by sep_nm at a
/// common speed. Used by the simulator; no table rounding.
inline double headway_seconds_exact(double sep_nm, double speed_kmh) {
  if (!(sep_nm > 0.0) || !(speed_kmh > 0.0))
    throw std::domain_error("separation and speed must be positive");
  return sep_nm * core::kKmPerNauticalMile / speed_kmh * 3600.0;
}

/// Headway in whole seconds as tabulated: the separation is first expressed
/// in kilometers at 0.1 km resolution (the printed convention), then divided
/// by speed. 5 NM at 250 km/h gives 134 s.
inline int headway_s(double sep_nm, double speed_kmh) {
  if (!(sep_nm > 0.0) || !(speed_kmh > 0.0))
    throw std::domain_error("separation and speed must be positive");
  const double sep_km = std::round(sep_nm * core::kKmPerNauticalMile * 10.0) / 10.0;
  return static_cast<int>(round_half_up(sep_km / speed_kmh * 3600.0));
}

/// Capacity as the inverse of the tabulated headway (the "inverse radar
/// separation" column): 2.5 NM at 250 km/h gives 66 s and 55 flights/h.
inline int table_capacity_per_h(double sep_nm, double speed_kmh) {
  return static_cast<int>(round_half_up(3600.0 / headway_s(sep_nm, speed_kmh)));
}

/// Capacity formula C = V / D with D in kilometers, rounded half up.
/// Reproduces the per-scenario landing capacities (3.08 NM -> 53/48/44 at
/// 300/275/250 km/h).
inline int capacity_per_h(double sep_nm, double speed_kmh) {
  if (!(sep_nm > 0.0) || !(speed_kmh > 0.0))
    throw std::domain_error("separation and speed must be positive");
  return static_cast<int>(round_half_up(speed_kmh / (sep_nm * core::kKmPerNauticalMile)));
}

struct HeadwayRow {
  int headway_s{0};
  int capacity_per_h{0};
};

inline HeadwayRow headway_row(double sep_nm, double speed_kmh) {
  return {headway_s(sep_nm, speed_kmh), table_capacity_per_h(sep_nm, speed_kmh)};
}

/// Capacity of a scheduled sequence from its average separation minimum.
inline int schedule_capacity_estimate(std::span<const WtcClass> classes,
                                      const SeparationPolicy& policy, double speed_kmh) {
  const auto seq = sequence_separation(classes, policy);
  if (!seq.avg_nm) throw std::domain_error("need at least two movements");
  return capacity_per_h(*seq.avg_nm, speed_kmh);
}

/// Demand over capacity as a percentage; may exceed 100.
inline double capacity_utilization(double demand, double capacity) {
  if (!(capacity > 0.0)) throw std::domain_error("capacity must be positive");
  return 100.0 * demand / capacity;
}

}  // namespace airkit::cap
