#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "airkit/core/types.hpp"

namespace airkit::perf {

struct DelaySample {
  std::string flight_id;
  double delay_min{0.0};  // actual minus scheduled; negative = early
  core::Direction direction{core::Direction::Arrival};
};

struct PunctualityReport {
  double pct_on_time{0.0};
  double mean_delay_min{0.0};
  std::map<int, int> histogram;  // 1-minute bins keyed by floor(delay)
};

/// Share of flights delayed less than threshold minutes. Early arrivals count
/// as on-time; clamp_negative treats them as zero-delay for the operational
/// delay semantics used by the simulator.
inline PunctualityReport punctuality(const std::vector<DelaySample>& samples,
                                     double threshold_min = 15.0,
                                     bool clamp_negative = false) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  PunctualityReport r;
  int on_time = 0;
  double sum = 0.0;
  for (const auto& s : samples) {
    const double d = clamp_negative ? std::max(0.0, s.delay_min) : s.delay_min;
    if (d < threshold_min) ++on_time;
    sum += d;
    ++r.histogram[static_cast<int>(std::floor(d))];
  }
  r.pct_on_time = 100.0 * on_time / static_cast<double>(samples.size());
  r.mean_delay_min = sum / static_cast<double>(samples.size());
  return r;
}

}  // namespace airkit::perf
