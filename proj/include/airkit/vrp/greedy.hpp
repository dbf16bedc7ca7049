#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "airkit/vrp/instance.hpp"

namespace airkit::vrp {

struct InfeasibleInstance : std::runtime_error {
  explicit InfeasibleInstance(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct Insertion {
  int node{-1};
  int vehicle{-1};
  std::size_t position{0};
  double delta{std::numeric_limits<double>::infinity()};
};

/// Cheapest feasible insertion over all (node, vehicle, position) triples.
/// Ties break on lowest node id, then lowest vehicle id, then position.
inline Insertion best_insertion(const PushbackInstance& inst,
                                const std::vector<std::vector<int>>& routes,
                                const std::vector<int>& pending) {
  Insertion best;
  std::vector<double> scratch(inst.n, 0.0);
  for (int node : pending) {
    for (int p = 0; p < inst.vehicles(); ++p) {
      if (!inst.qualified(p, node)) continue;
      const auto& route = routes[p];
      const Matrix& c = inst.cost[p];
      for (std::size_t pos = 0; pos <= route.size(); ++pos) {
        const int before = pos == 0 ? 0 : route[pos - 1];
        const int after = pos == route.size() ? 0 : route[pos];
        const double delta = c[before][node] + c[node][after] - c[before][after];
        if (delta >= best.delta) continue;  // tie-break prefers first found
        std::vector<int> candidate = route;
        candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(pos), node);
        if (!schedule_route(inst, candidate, scratch)) continue;
        best = {node, p, pos, delta};
      }
    }
  }
  return best;
}

}  // namespace detail

/// Greedy constructor: cheapest feasible insertion until every service is
/// placed. Deterministic; throws InfeasibleInstance naming the first node
/// that cannot be placed.
inline Solution greedy_construct(const PushbackInstance& inst) {
  inst.validate();
  for (int j = 1; j < inst.n; ++j) {
    bool any = false;
    for (int p = 0; p < inst.vehicles() && !any; ++p) any = inst.qualified(p, j);
    if (!any)
      throw InfeasibleInstance("no qualified vehicle for node " + std::to_string(j));
  }

  Solution sol;
  sol.routes.assign(static_cast<std::size_t>(inst.vehicles()), {});
  std::vector<int> pending;
  for (int j = 1; j < inst.n; ++j) pending.push_back(j);

  while (!pending.empty()) {
    const auto ins = detail::best_insertion(inst, sol.routes, pending);
    if (ins.node < 0)
      throw InfeasibleInstance("no feasible insertion for node " +
                               std::to_string(pending.front()));
    auto& route = sol.routes[ins.vehicle];
    route.insert(route.begin() + static_cast<std::ptrdiff_t>(ins.position), ins.node);
    std::erase(pending, ins.node);
  }

  sol.start_time.assign(inst.n, 0.0);
  for (int p = 0; p < inst.vehicles(); ++p) schedule_route(inst, sol.routes[p], sol.start_time);
  sol.total_cost = solution_cost(inst, sol);
  return sol;
}

}  // namespace airkit::vrp
