#pragma once

#include <algorithm>
#include <vector>

#include "airkit/core/types.hpp"

namespace airkit::core {

struct TurnaroundLinks {
  std::vector<std::pair<Flight, Flight>> pairs;  // (arrival, departure)
  std::vector<Flight> unmatched_arrivals;
  std::vector<Flight> unmatched_departures;
};

enum class TurnaroundMatcher {
  CarrierAndType,  // airline plus aircraft type comparison
  ExactTail,       // registration identity
};

/// Link each arrival to the earliest unmatched departure at the same airport
/// satisfying the matcher, with departure >= arrival + min_turnaround
/// (boundary inclusive). Each departure is used at most once.
inline TurnaroundLinks link_turnarounds(std::vector<Flight> arrivals,
                                        std::vector<Flight> departures,
                                        int min_turnaround_min = 15,
                                        TurnaroundMatcher matcher =
                                            TurnaroundMatcher::CarrierAndType) {
  auto by_time = [](const Flight& a, const Flight& b) {
    if (a.sched_time != b.sched_time) return a.sched_time < b.sched_time;
    return a.flight_id < b.flight_id;
  };
  std::stable_sort(arrivals.begin(), arrivals.end(), by_time);
  std::stable_sort(departures.begin(), departures.end(), by_time);

  TurnaroundLinks out;
  std::vector<bool> used(departures.size(), false);
  for (const auto& arr : arrivals) {
    bool matched = false;
    for (std::size_t j = 0; j < departures.size(); ++j) {
      if (used[j]) continue;
      const auto& dep = departures[j];
      if (dep.sched_time - arr.sched_time < min_turnaround_min) continue;
      bool compatible = false;
      switch (matcher) {
        case TurnaroundMatcher::CarrierAndType:
          compatible = dep.carrier == arr.carrier && dep.aircraft_code == arr.aircraft_code;
          break;
        case TurnaroundMatcher::ExactTail:
          compatible = dep.tail && arr.tail && *dep.tail == *arr.tail;
          break;
      }
      if (!compatible) continue;
      used[j] = true;
      out.pairs.emplace_back(arr, dep);
      matched = true;
      break;
    }
    if (!matched) out.unmatched_arrivals.push_back(arr);
  }
  for (std::size_t j = 0; j < departures.size(); ++j)
    if (!used[j]) out.unmatched_departures.push_back(departures[j]);
  return out;
}

}  // namespace airkit::core
