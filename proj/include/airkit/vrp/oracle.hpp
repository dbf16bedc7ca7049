#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "airkit/vrp/instance.hpp"

namespace airkit::vrp {

/// Exhaustive optimum for tiny instances (n <= 9 including the depot).
///
/// For every vehicle and every subset of its qualified services, the cheapest
/// window-feasible visiting order is found by permutation enumeration; a
/// partition DP over vehicles then assembles the provable optimum. Returns
/// nullopt when no feasible solution exists.
inline std::optional<Solution> exact_oracle(const PushbackInstance& inst) {
  inst.validate();
  if (inst.n > 9) throw std::invalid_argument("oracle limited to n <= 9 nodes");
  const int services = inst.services();
  const int full = (1 << services) - 1;
  const int vehicles = inst.vehicles();
  constexpr double inf = std::numeric_limits<double>::infinity();

  // best_route[p][mask]: cheapest feasible order of exactly these services.
  std::vector<std::vector<double>> best_cost(
      static_cast<std::size_t>(vehicles), std::vector<double>(full + 1, inf));
  std::vector<std::vector<std::vector<int>>> best_order(
      static_cast<std::size_t>(vehicles), std::vector<std::vector<int>>(full + 1));
  std::vector<double> scratch(inst.n, 0.0);

  for (int p = 0; p < vehicles; ++p) {
    best_cost[p][0] = 0.0;
    for (int mask = 1; mask <= full; ++mask) {
      std::vector<int> members;
      bool ok = true;
      for (int s = 0; s < services; ++s) {
        if (!(mask & (1 << s))) continue;
        if (!inst.qualified(p, s + 1)) { ok = false; break; }
        members.push_back(s + 1);
      }
      if (!ok) continue;
      std::sort(members.begin(), members.end());
      do {
        if (!schedule_route(inst, members, scratch)) continue;
        const double c = route_cost(inst, p, members);
        if (c < best_cost[p][mask]) {
          best_cost[p][mask] = c;
          best_order[p][mask] = members;
        }
      } while (std::next_permutation(members.begin(), members.end()));
    }
  }

  // dp[mask]: min cost covering mask with the vehicles processed so far.
  std::vector<double> dp(full + 1, inf);
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(vehicles));
  std::vector<std::vector<int>> parent_choice(
      static_cast<std::size_t>(vehicles), std::vector<int>(full + 1, -1));
  dp[0] = 0.0;
  for (int p = 0; p < vehicles; ++p) {
    std::vector<double> next(full + 1, inf);
    for (int covered = 0; covered <= full; ++covered) {
      if (dp[covered] == inf) continue;
      const int rest = full & ~covered;
      // Enumerate subsets of the uncovered services for this vehicle.
      for (int sub = rest;; sub = (sub - 1) & rest) {
        if (best_cost[p][sub] < inf) {
          const double c = dp[covered] + best_cost[p][sub];
          if (c < next[covered | sub]) {
            next[covered | sub] = c;
            parent_choice[p][covered | sub] = sub;
          }
        }
        if (sub == 0) break;
      }
    }
    dp = std::move(next);
  }
  if (dp[full] == inf) return std::nullopt;

  Solution sol;
  sol.routes.assign(static_cast<std::size_t>(vehicles), {});
  int mask = full;
  for (int p = vehicles - 1; p >= 0; --p) {
    const int sub = parent_choice[p][mask];
    if (sub < 0) return std::nullopt;  // unreachable when dp[full] is finite
    sol.routes[p] = best_order[p][sub];
    mask &= ~sub;
  }
  sol.start_time.assign(inst.n, 0.0);
  for (int p = 0; p < vehicles; ++p) schedule_route(inst, sol.routes[p], sol.start_time);
  sol.total_cost = solution_cost(inst, sol);
  return sol;
}

}  // namespace airkit::vrp
