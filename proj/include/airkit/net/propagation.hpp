#pragma once

#include <algorithm>
#include <vector>

#include "airkit/core/rotations.hpp"

namespace airkit::net {

/// Delay inherited by a leg from the same tail's previous arrival.
struct PropagationRecord {
  std::string flight_id;
  std::string tail;
  int leg_index{1};  // panel time, 1-based
  double inbound_delay_min{0.0};
  double own_arrival_delay_min{0.0};
};

/// First leg of the day inherits nothing; later legs inherit the previous
/// leg's arrival delay. Negative delays clamp to zero on both columns.
inline std::vector<PropagationRecord> propagation(const std::vector<core::Rotation>& rotations) {
  std::vector<PropagationRecord> out;
  for (const auto& rot : rotations) {
    double prev_arrival_delay = 0.0;
    for (std::size_t i = 0; i < rot.legs.size(); ++i) {
      const auto& leg = rot.legs[i];
      PropagationRecord rec;
      rec.flight_id = leg.flight_id;
      rec.tail = rot.tail;
      rec.leg_index = static_cast<int>(i + 1);
      rec.inbound_delay_min = i == 0 ? 0.0 : prev_arrival_delay;
      const auto delay = leg.delay_min();
      rec.own_arrival_delay_min = delay ? std::max<double>(0.0, static_cast<double>(*delay)) : 0.0;
      prev_arrival_delay = rec.own_arrival_delay_min;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace airkit::net
