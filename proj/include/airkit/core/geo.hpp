#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "airkit/core/types.hpp"

namespace airkit::core {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kKmPerNauticalMile = 1.852;

/// Haversine great-circle distance on a sphere of radius 6371 km.
inline double great_circle_km(const Airport& a, const Airport& b) {
  if (a.lat_deg < -90.0 || a.lat_deg > 90.0 || b.lat_deg < -90.0 || b.lat_deg > 90.0 ||
      a.lon_deg < -180.0 || a.lon_deg > 180.0 || b.lon_deg < -180.0 || b.lon_deg > 180.0)
    throw std::invalid_argument("coordinates out of range");
  constexpr double rad = std::numbers::pi / 180.0;
  const double phi1 = a.lat_deg * rad;
  const double phi2 = b.lat_deg * rad;
  const double dphi = (b.lat_deg - a.lat_deg) * rad;
  const double dlam = (b.lon_deg - a.lon_deg) * rad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace airkit::core
