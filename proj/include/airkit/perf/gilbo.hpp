#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace airkit::perf {

/// One observed operating hour: arrivals and departures served.
struct HourlyPoint {
  double arrivals{0.0};
  double departures{0.0};
};

/// Staircase dominance frontier of observed (arrivals, departures) hours:
/// arrivals strictly increasing, departures non-increasing. Every observation
/// is dominated by some frontier point. Not a convex hull; the envelope
/// traces observed maxima.
struct GilboEnvelope {
  std::vector<HourlyPoint> frontier;

  bool dominates(const HourlyPoint& q) const {
    for (const auto& p : frontier)
      if (p.arrivals >= q.arrivals && p.departures >= q.departures) return true;
    return false;
  }
};

inline GilboEnvelope gilbo_envelope(std::vector<HourlyPoint> points) {
  if (points.empty()) throw std::invalid_argument("no hourly points");
  std::sort(points.begin(), points.end(), [](const HourlyPoint& a, const HourlyPoint& b) {
    if (a.arrivals != b.arrivals) return a.arrivals < b.arrivals;
    return a.departures > b.departures;
  });
  // One candidate per arrival count: the max departures observed there.
  points.erase(std::unique(points.begin(), points.end(),
                           [](const HourlyPoint& a, const HourlyPoint& b) {
                             return a.arrivals == b.arrivals;
                           }),
               points.end());
  // Sweep from high arrivals down, keeping the running max of departures.
  GilboEnvelope env;
  double best_dep = -1.0;
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    if (it->departures > best_dep) {
      best_dep = it->departures;
      env.frontier.push_back({it->arrivals, best_dep});
    }
  }
  std::reverse(env.frontier.begin(), env.frontier.end());
  return env;
}

/// Balanced capacity from the 45-degree line: twice the largest k such that
/// some frontier point serves at least k arrivals and k departures.
inline double balanced_capacity(const GilboEnvelope& env) {
  double best = 0.0;
  for (const auto& p : env.frontier)
    best = std::max(best, std::min(p.arrivals, p.departures));
  return 2.0 * best;
}

}  // namespace airkit::perf
