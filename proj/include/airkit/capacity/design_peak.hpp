#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "airkit/core/time.hpp"

namespace airkit::cap {

using core::CivilDate;

/// A design day with its hourly movement profile.
struct DesignPeak {
  CivilDate day;
  std::array<int, 24> hourly_counts{};
  int peak_hour{0};
  int peak_count{0};
  int daily_count{0};
};

/// Pick the design day from daily totals. The absolute peak day is skipped
/// when it is unique (a design period must recur, not record the record);
/// with exclude_top_fridays the busiest non-Friday wins instead. Ties go to
/// the earliest date.
inline std::pair<CivilDate, int> select_design_day(const std::map<CivilDate, int>& daily,
                                                   bool exclude_top_fridays = false) {
  if (daily.size() < 2) throw std::invalid_argument("need at least two distinct days");

  if (exclude_top_fridays) {
    const std::pair<const CivilDate, int>* best = nullptr;
    for (const auto& e : daily) {
      if (core::is_friday(e.first)) continue;
      if (!best || e.second > best->second) best = &e;
    }
    if (!best) throw std::invalid_argument("all candidate days are Fridays");
    return {best->first, best->second};
  }

  int max_count = 0;
  int max_multiplicity = 0;
  const CivilDate* max_day = nullptr;
  for (const auto& e : daily) {
    if (e.second > max_count) {
      max_count = e.second;
      max_multiplicity = 1;
      max_day = &e.first;
    } else if (e.second == max_count) {
      ++max_multiplicity;
    }
  }
  if (max_multiplicity > 1) {
    // No unique absolute peak; the earliest of the tied busiest days.
    for (const auto& e : daily)
      if (e.second == max_count) return {e.first, e.second};
  }
  const std::pair<const CivilDate, int>* best = nullptr;
  for (const auto& e : daily) {
    if (&e.first == max_day) continue;
    if (!best || e.second > best->second) best = &e;
  }
  return {best->first, best->second};
}

inline DesignPeak design_peak_from_hourly(const CivilDate& day,
                                          const std::array<int, 24>& hourly) {
  DesignPeak p;
  p.day = day;
  p.hourly_counts = hourly;
  auto it = std::max_element(hourly.begin(), hourly.end());
  p.peak_hour = static_cast<int>(it - hourly.begin());
  p.peak_count = *it;
  for (int c : hourly) p.daily_count += c;
  return p;
}

/// Full selection over per-day hourly profiles.
inline DesignPeak select_design_peak(const std::map<CivilDate, std::array<int, 24>>& days,
                                     bool exclude_top_fridays = false) {
  std::map<CivilDate, int> totals;
  for (const auto& [d, hours] : days) {
    int sum = 0;
    for (int c : hours) sum += c;
    totals[d] = sum;
  }
  const auto [day, _] = select_design_day(totals, exclude_top_fridays);
  return design_peak_from_hourly(day, days.at(day));
}

/// Share of the design hour in the annual volume, in percent.
inline double design_hour_factor(double peak_hour_pax, double annual_pax) {
  if (!(annual_pax > 0.0)) throw std::domain_error("annual volume must be positive");
  return 100.0 * peak_hour_pax / annual_pax;
}

inline double peak_from_factor(double annual_pax, double factor_pct) {
  return annual_pax * factor_pct / 100.0;
}

}  // namespace airkit::cap
