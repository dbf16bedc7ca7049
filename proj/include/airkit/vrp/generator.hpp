#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "airkit/vrp/instance.hpp"

namespace airkit::vrp {

namespace detail {

inline Matrix euclidean_matrix(const std::vector<std::pair<double, double>>& pos) {
  const std::size_t n = pos.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = pos[i].first - pos[j].first;
      const double dy = pos[i].second - pos[j].second;
      m[i][j] = std::sqrt(dx * dx + dy * dy);
    }
  return m;
}

}  // namespace detail

/// Benchmark-shaped instance: 17 gates served by 6 pushback vehicles with
/// skills (2,2,2,2,3,3); three gates require skill 1, seven skill 2 and seven
/// skill 3; windows open between 0 and 100 time units and stay open for 25.
/// Costs are vehicle-independent Euclidean gate distances.
///
/// Under skill sets the three skill-1 gates have no exactly-matching vehicle,
/// so the instance is infeasible as published; add_skill1_vehicle repairs
/// that by adding a seventh, skill-1 vehicle.
inline PushbackInstance generate_benchmark_instance(std::uint64_t seed,
                                                SkillMode mode = SkillMode::Levels,
                                                bool add_skill1_vehicle = false) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  PushbackInstance inst;
  inst.mode = mode;
  inst.n = 18;  // depot + 17 gates

  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::vector<std::pair<double, double>> pos;
  pos.emplace_back(5.0, 5.0);  // depot
  for (int i = 1; i < inst.n; ++i) pos.emplace_back(coord(rng), coord(rng));
  const Matrix dist = detail::euclidean_matrix(pos);
  inst.travel_time = dist;

  inst.vehicle_skill = {2, 2, 2, 2, 3, 3};
  if (add_skill1_vehicle) inst.vehicle_skill.push_back(1);
  inst.cost = expand_shared_cost(dist, inst.vehicles());

  std::vector<int> census;
  census.insert(census.end(), 3, 1);
  census.insert(census.end(), 7, 2);
  census.insert(census.end(), 7, 3);
  for (std::size_t i = census.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(census[i - 1], census[pick(rng)]);
  }
  inst.skill_required.assign(inst.n, 0);
  for (int j = 1; j < inst.n; ++j) inst.skill_required[j] = census[j - 1];

  inst.op_time.assign(inst.n, 3.0);
  inst.op_time[0] = 0.0;
  inst.window_open.assign(inst.n, 0.0);
  inst.window_close.assign(inst.n, 1e18);
  std::uniform_int_distribution<int> opens(0, 100);
  for (int j = 1; j < inst.n; ++j) {
    inst.window_open[j] = static_cast<double>(opens(rng));
    inst.window_close[j] = inst.window_open[j] + 25.0;
  }
  inst.validate();
  return inst;
}

/// Small random instance for oracle comparisons: n_total nodes including the
/// depot, the same window law as the benchmark, skills drawn from {1, 2, 3}.
inline PushbackInstance generate_random_instance(std::uint64_t seed, int n_total,
                                                 int n_vehicles,
                                                 SkillMode mode = SkillMode::Levels) {
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbULL);
  PushbackInstance inst;
  inst.mode = mode;
  inst.n = n_total;

  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::vector<std::pair<double, double>> pos;
  pos.emplace_back(5.0, 5.0);
  for (int i = 1; i < inst.n; ++i) pos.emplace_back(coord(rng), coord(rng));
  const Matrix dist = detail::euclidean_matrix(pos);
  inst.travel_time = dist;

  std::uniform_int_distribution<int> skill(1, 3);
  inst.vehicle_skill.clear();
  for (int p = 0; p < n_vehicles; ++p) inst.vehicle_skill.push_back(skill(rng));
  if (mode == SkillMode::Levels) {
    // One top-skill vehicle keeps every node coverable.
    inst.vehicle_skill[0] = 3;
  }
  inst.cost = expand_shared_cost(dist, inst.vehicles());

  inst.skill_required.assign(inst.n, 0);
  for (int j = 1; j < inst.n; ++j) inst.skill_required[j] = skill(rng);
  if (mode == SkillMode::Sets) {
    // Guarantee a qualified vehicle per node by matching each requirement to
    // a random vehicle's skill.
    std::uniform_int_distribution<int> pick(0, n_vehicles - 1);
    for (int j = 1; j < inst.n; ++j) inst.skill_required[j] = inst.vehicle_skill[pick(rng)];
  }

  inst.op_time.assign(inst.n, 3.0);
  inst.op_time[0] = 0.0;
  inst.window_open.assign(inst.n, 0.0);
  inst.window_close.assign(inst.n, 1e18);
  std::uniform_int_distribution<int> opens(0, 100);
  for (int j = 1; j < inst.n; ++j) {
    inst.window_open[j] = static_cast<double>(opens(rng));
    inst.window_close[j] = inst.window_open[j] + 25.0;
  }
  inst.validate();
  return inst;
}

}  // namespace airkit::vrp
