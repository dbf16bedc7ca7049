#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "airkit/vrp/instance.hpp"

namespace airkit::vrp {

struct Violation {
  enum class Kind { Coverage, Skill, Window, Temporal, Structure, Cost };
  Kind kind{Kind::Structure};
  std::string message;
};

/// Independent solution auditor. Verifies coverage (every service on exactly
/// one route), skill qualification, window bounds on start times, temporal
/// consistency along each route, and the reported cost. Knows nothing about
/// how the solution was produced.
inline std::vector<Violation> check_feasible(const PushbackInstance& inst,
                                             const Solution& sol) {
  std::vector<Violation> v;
  auto add = [&](Violation::Kind k, std::string msg) { v.push_back({k, std::move(msg)}); };

  if (static_cast<int>(sol.routes.size()) != inst.vehicles()) {
    add(Violation::Kind::Structure, "expected one route per vehicle");
    return v;
  }
  std::vector<int> seen(inst.n, 0);
  for (int p = 0; p < inst.vehicles(); ++p) {
    for (int node : sol.routes[p]) {
      if (node <= 0 || node >= inst.n) {
        add(Violation::Kind::Structure, "route of vehicle " + std::to_string(p) +
                                            " visits invalid node " + std::to_string(node));
        continue;
      }
      ++seen[node];
      if (!inst.qualified(p, node))
        add(Violation::Kind::Skill, "vehicle " + std::to_string(p) + " (skill " +
                                        std::to_string(inst.vehicle_skill[p]) +
                                        ") not qualified for node " + std::to_string(node) +
                                        " (requires " +
                                        std::to_string(inst.skill_required[node]) + ")");
    }
  }
  for (int j = 1; j < inst.n; ++j) {
    if (seen[j] == 0)
      add(Violation::Kind::Coverage, "node " + std::to_string(j) + " unserved");
    else if (seen[j] > 1)
      add(Violation::Kind::Coverage, "node " + std::to_string(j) + " served " +
                                         std::to_string(seen[j]) + " times");
  }
  if (static_cast<int>(sol.start_time.size()) != inst.n) {
    add(Violation::Kind::Structure, "start_time must have one entry per node");
    return v;
  }

  constexpr double eps = 1e-6;
  for (int p = 0; p < inst.vehicles(); ++p) {
    int prev = 0;
    double prev_done = 0.0;  // departure-ready time at prev
    for (int node : sol.routes[p]) {
      if (node <= 0 || node >= inst.n) continue;
      const double w = sol.start_time[node];
      if (w < inst.window_open[node] - eps || w > inst.window_close[node] + eps)
        add(Violation::Kind::Window,
            "node " + std::to_string(node) + " starts at " + std::to_string(w) +
                " outside [" + std::to_string(inst.window_open[node]) + ", " +
                std::to_string(inst.window_close[node]) + "]");
      const double earliest = prev_done + inst.travel_time[prev][node];
      if (w < earliest - eps)
        add(Violation::Kind::Temporal,
            "node " + std::to_string(node) + " starts at " + std::to_string(w) +
                " before reachable time " + std::to_string(earliest));
      prev_done = w + inst.op_time[node];
      prev = node;
    }
  }

  const double recomputed = solution_cost(inst, sol);
  if (std::abs(recomputed - sol.total_cost) > 1e-6 * std::max(1.0, std::abs(recomputed)))
    add(Violation::Kind::Cost, "reported cost " + std::to_string(sol.total_cost) +
                                   " != recomputed " + std::to_string(recomputed));
  return v;
}

inline bool feasible(const PushbackInstance& inst, const Solution& sol) {
  return check_feasible(inst, sol).empty();
}

}  // namespace airkit::vrp
