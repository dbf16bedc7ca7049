#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "airkit/vrp/greedy.hpp"

namespace airkit::vrp {

struct LnsParams {
  double destroy_fraction{0.25};
  double time_limit_s{1.0};
  /// Optional hard iteration cap; with it set the search is fully
  /// deterministic for a fixed (instance, seed) regardless of wall clock.
  std::optional<std::uint64_t> max_iterations;
  std::uint64_t seed{0};
  /// Repair randomization: candidate insertions within this relative spread
  /// of the cheapest are drawn uniformly.
  double repair_spread{0.3};
  /// Accept criterion. Strictly improving is the default; the annealing
  /// acceptance is provided as a configuration stub and stays off.
  bool annealing_accept{false};
  double annealing_temperature{0.0};
};

struct LnsStats {
  std::uint64_t iterations{0};
  std::uint64_t accepted{0};
  std::vector<double> best_cost_trace;
};

namespace detail {

/// Remove ceil(fraction * services) distinct random services from a solution.
inline std::vector<int> destroy(const PushbackInstance& inst, Solution& sol,
                                double fraction, std::mt19937_64& rng) {
  std::vector<int> placed;
  for (const auto& route : sol.routes)
    for (int node : route) placed.push_back(node);
  const auto k = static_cast<std::size_t>(
      std::min<double>(static_cast<double>(placed.size()),
                       std::ceil(fraction * static_cast<double>(inst.services()))));
  // Partial Fisher-Yates keeps the draw deterministic across platforms.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, placed.size() - 1);
    std::swap(placed[i], placed[pick(rng)]);
  }
  std::vector<int> removed(placed.begin(), placed.begin() + static_cast<std::ptrdiff_t>(k));
  for (auto& route : sol.routes)
    std::erase_if(route, [&](int node) {
      return std::find(removed.begin(), removed.end(), node) != removed.end();
    });
  std::sort(removed.begin(), removed.end());
  return removed;
}

/// One feasible insertion of `node`, drawn uniformly from the candidate list
/// of positions within `spread` of the cheapest. Pure cheapest insertion
/// keeps rebuilding the same structure; the spread is what lets repeated
/// repairs reach different solutions.
inline Insertion randomized_insertion(const PushbackInstance& inst,
                                      const std::vector<std::vector<int>>& routes, int node,
                                      std::mt19937_64& rng, double spread) {
  std::vector<Insertion> feasible;
  std::vector<double> scratch(inst.n, 0.0);
  double cheapest = std::numeric_limits<double>::infinity();
  for (int p = 0; p < inst.vehicles(); ++p) {
    if (!inst.qualified(p, node)) continue;
    const auto& route = routes[p];
    const Matrix& c = inst.cost[p];
    for (std::size_t pos = 0; pos <= route.size(); ++pos) {
      const int before = pos == 0 ? 0 : route[pos - 1];
      const int after = pos == route.size() ? 0 : route[pos];
      const double delta = c[before][node] + c[node][after] - c[before][after];
      std::vector<int> candidate = route;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(pos), node);
      if (!schedule_route(inst, candidate, scratch)) continue;
      feasible.push_back({node, p, pos, delta});
      cheapest = std::min(cheapest, delta);
    }
  }
  if (feasible.empty()) return {};
  std::vector<const Insertion*> shortlist;
  const double cutoff = cheapest + spread * std::max(1e-9, std::abs(cheapest));
  for (const auto& ins : feasible)
    if (ins.delta <= cutoff) shortlist.push_back(&ins);
  std::uniform_int_distribution<std::size_t> pick(0, shortlist.size() - 1);
  return *shortlist[pick(rng)];
}

/// Greedy repair: reinsert removed services in a random order, each at a
/// near-cheapest feasible position. Returns false if some service cannot be
/// placed back.
inline bool repair(const PushbackInstance& inst, Solution& sol, std::vector<int> pending,
                   std::mt19937_64& rng, double spread) {
  for (std::size_t i = pending.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(pending[i - 1], pending[pick(rng)]);
  }
  for (int node : pending) {
    const auto ins = randomized_insertion(inst, sol.routes, node, rng, spread);
    if (ins.node < 0) return false;
    auto& route = sol.routes[ins.vehicle];
    route.insert(route.begin() + static_cast<std::ptrdiff_t>(ins.position), ins.node);
  }
  return true;
}

inline void finalize(const PushbackInstance& inst, Solution& sol) {
  sol.start_time.assign(inst.n, 0.0);
  for (int p = 0; p < inst.vehicles(); ++p) schedule_route(inst, sol.routes[p], sol.start_time);
  sol.total_cost = solution_cost(inst, sol);
}

}  // namespace detail

/// Large neighborhood search over destroy-and-repair moves starting from the
/// greedy solution. The current solution is replaced only on improvement and
/// the best is tracked separately; the best-cost trace is non-increasing.
inline Solution lns_solve(const PushbackInstance& inst, const LnsParams& params = {},
                          LnsStats* stats = nullptr) {
  Solution current = greedy_construct(inst);
  Solution best = current;
  if (stats) stats->best_cost_trace.push_back(best.total_cost);

  std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto t0 = std::chrono::steady_clock::now();
  auto expired = [&](std::uint64_t iter) {
    if (params.max_iterations && iter >= *params.max_iterations) return true;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count() >= params.time_limit_s;
  };

  std::uint64_t iter = 0;
  while (!expired(iter)) {
    ++iter;
    Solution candidate = current;
    auto removed = detail::destroy(inst, candidate, params.destroy_fraction, rng);
    if (!detail::repair(inst, candidate, std::move(removed), rng, params.repair_spread)) continue;
    candidate.total_cost = solution_cost(inst, candidate);

    bool accept = candidate.total_cost < current.total_cost;
    if (!accept && params.annealing_accept && params.annealing_temperature > 0.0) {
      const double delta = candidate.total_cost - current.total_cost;
      std::uniform_real_distribution<double> u(0.0, 1.0);
      accept = u(rng) < std::exp(-delta / params.annealing_temperature);
    }
    if (accept) {
      current = candidate;
      if (stats) ++stats->accepted;
    }
    if (candidate.total_cost < best.total_cost) {
      best = candidate;
    }
    if (stats) stats->best_cost_trace.push_back(best.total_cost);
  }
  if (stats) stats->iterations = iter;

  detail::finalize(inst, best);
  return best;
}

}  // namespace airkit::vrp
