#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "airkit/core/types.hpp"

namespace airkit::core {

struct RotationResult {
  std::vector<Rotation> rotations;
  std::size_t excluded_tailless{0};
};

/// Group flights by (tail, day of scheduled departure), order legs by
/// scheduled time. Tail-less flights are excluded and counted, never guessed.
inline RotationResult build_rotations(const std::vector<Flight>& flights) {
  RotationResult result;
  std::map<std::pair<std::string, std::int64_t>, std::vector<Flight>> groups;
  for (const auto& f : flights) {
    if (!f.tail || f.tail->empty()) {
      ++result.excluded_tailless;
      continue;
    }
    groups[{*f.tail, days_since_epoch(date_of(f.sched_time))}].push_back(f);
  }
  for (auto& [key, legs] : groups) {
    std::stable_sort(legs.begin(), legs.end(), [](const Flight& a, const Flight& b) {
      if (a.sched_time != b.sched_time) return a.sched_time < b.sched_time;
      return a.flight_id < b.flight_id;
    });
    Rotation rot;
    rot.tail = key.first;
    rot.day = civil_from_days(key.second);
    for (std::size_t i = 1; i < legs.size(); ++i)
      if (legs[i].origin != legs[i - 1].destination)
        rot.continuity_violations.push_back(static_cast<int>(i + 1));
    rot.legs = std::move(legs);
    result.rotations.push_back(std::move(rot));
  }
  return result;
}

}  // namespace airkit::core
