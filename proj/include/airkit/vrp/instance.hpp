#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace airkit::vrp {

/// Vehicle qualification semantics. Levels: a vehicle serves any requirement
/// at or below its own skill. Sets: skills must match exactly.
enum class SkillMode { Levels, Sets };

using Matrix = std::vector<std::vector<double>>;

/// Pushback routing instance. Node 0 is the depot; nodes 1..n-1 are services
/// with a required skill, a time window [a, b] on service start, and an
/// operation time.
struct PushbackInstance {
  int n{1};
  SkillMode mode{SkillMode::Levels};
  std::vector<int> skill_required;      // size n, entry 0 unused
  std::vector<int> vehicle_skill;       // one per vehicle
  std::vector<Matrix> cost;             // per vehicle, n x n
  Matrix travel_time;                   // shared, n x n
  std::vector<double> op_time;          // size n
  std::vector<double> window_open;      // a_i, size n
  std::vector<double> window_close;     // b_i, size n

  int vehicles() const { return static_cast<int>(vehicle_skill.size()); }
  int services() const { return n - 1; }

  bool qualified(int vehicle, int node) const {
    if (node == 0) return true;
    const int sp = vehicle_skill[vehicle];
    const int sj = skill_required[node];
    return mode == SkillMode::Levels ? sp >= sj : sp == sj;
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("instance needs a depot");
    if (vehicle_skill.empty()) throw std::invalid_argument("instance needs vehicles");
    auto check_matrix = [&](const Matrix& m, const char* what) {
      if (static_cast<int>(m.size()) != n) throw std::invalid_argument(std::string(what) + " size");
      for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n)
          throw std::invalid_argument(std::string(what) + " row size");
        for (double v : row)
          if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument(std::string(what) + " entries must be non-negative");
      }
    };
    if (static_cast<int>(cost.size()) != vehicles())
      throw std::invalid_argument("need one cost matrix per vehicle");
    for (const auto& m : cost) check_matrix(m, "cost");
    check_matrix(travel_time, "travel_time");
    if (static_cast<int>(skill_required.size()) != n ||
        static_cast<int>(op_time.size()) != n ||
        static_cast<int>(window_open.size()) != n ||
        static_cast<int>(window_close.size()) != n)
      throw std::invalid_argument("per-node arrays must have n entries");
    for (int i = 0; i < n; ++i)
      if (window_open[i] > window_close[i])
        throw std::invalid_argument("window closes before it opens at node " + std::to_string(i));
  }
};

/// Expand a shared cost matrix to per-vehicle copies.
inline std::vector<Matrix> expand_shared_cost(const Matrix& shared, int vehicles) {
  return std::vector<Matrix>(static_cast<std::size_t>(vehicles), shared);
}

/// Routes per vehicle (service nodes only, depot implicit at both ends) with
/// service start times. The route representation makes subtours impossible
/// by construction.
struct Solution {
  std::vector<std::vector<int>> routes;
  std::vector<double> start_time;  // size n, depot entry 0
  double total_cost{0.0};
};

/// Route cost including the depot legs.
inline double route_cost(const PushbackInstance& inst, int vehicle,
                         const std::vector<int>& route) {
  if (route.empty()) return 0.0;
  const Matrix& c = inst.cost[vehicle];
  double total = c[0][route.front()];
  for (std::size_t i = 1; i < route.size(); ++i) total += c[route[i - 1]][route[i]];
  total += c[route.back()][0];
  return total;
}

inline double solution_cost(const PushbackInstance& inst, const Solution& sol) {
  double total = 0.0;
  for (int p = 0; p < inst.vehicles(); ++p) total += route_cost(inst, p, sol.routes[p]);
  return total;
}

/// Earliest feasible service start times along a route, waiting at early
/// arrivals. Returns false if some window cannot be met.
inline bool schedule_route(const PushbackInstance& inst, const std::vector<int>& route,
                           std::vector<double>& start_time) {
  double clock = 0.0;
  int prev = 0;
  for (int node : route) {
    clock += inst.travel_time[prev][node];
    clock = std::max(clock, inst.window_open[node]);
    if (clock > inst.window_close[node] + 1e-9) return false;
    start_time[node] = clock;
    clock += inst.op_time[node];
    prev = node;
  }
  return true;
}

inline void to_json(nlohmann::json& j, const PushbackInstance& inst) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int i = 0; i < inst.n; ++i)
    nodes.push_back({{"id", i},
                     {"skill", inst.skill_required[i]},
                     {"window", {inst.window_open[i], inst.window_close[i]}},
                     {"op_time", inst.op_time[i]}});
  nlohmann::json vehicles = nlohmann::json::array();
  for (int s : inst.vehicle_skill) vehicles.push_back({{"skill", s}});
  j = nlohmann::json{{"mode", inst.mode == SkillMode::Levels ? "levels" : "sets"},
                     {"nodes", nodes},
                     {"vehicles", vehicles},
                     {"cost_per_vehicle", inst.cost},
                     {"travel_time", inst.travel_time}};
}

inline void from_json(const nlohmann::json& j, PushbackInstance& inst) {
  const std::string mode = j.value("mode", "levels");
  inst.mode = mode == "sets" ? SkillMode::Sets : SkillMode::Levels;
  const auto& nodes = j.at("nodes");
  inst.n = static_cast<int>(nodes.size());
  inst.skill_required.assign(inst.n, 0);
  inst.op_time.assign(inst.n, 0.0);
  inst.window_open.assign(inst.n, 0.0);
  inst.window_close.assign(inst.n, std::numeric_limits<double>::max());
  for (const auto& node : nodes) {
    const int id = node.at("id").get<int>();
    if (id < 0 || id >= inst.n) throw std::invalid_argument("node id out of range");
    inst.skill_required[id] = node.value("skill", 0);
    inst.op_time[id] = node.value("op_time", 0.0);
    if (node.contains("window")) {
      inst.window_open[id] = node.at("window").at(0).get<double>();
      inst.window_close[id] = node.at("window").at(1).get<double>();
    }
  }
  inst.vehicle_skill.clear();
  for (const auto& v : j.at("vehicles")) inst.vehicle_skill.push_back(v.at("skill").get<int>());
  if (j.contains("cost_per_vehicle")) {
    inst.cost = j.at("cost_per_vehicle").get<std::vector<Matrix>>();
  } else {
    inst.cost = expand_shared_cost(j.at("cost").get<Matrix>(), inst.vehicles());
  }
  if (j.contains("travel_time")) inst.travel_time = j.at("travel_time").get<Matrix>();
  else inst.travel_time = inst.cost.at(0);
  inst.validate();
}

inline void to_json(nlohmann::json& j, const Solution& sol) {
  j = nlohmann::json{{"routes", sol.routes},
                     {"start_times", sol.start_time},
                     {"total_cost", sol.total_cost}};
}

inline void from_json(const nlohmann::json& j, Solution& sol) {
  j.at("routes").get_to(sol.routes);
  j.at("start_times").get_to(sol.start_time);
  j.at("total_cost").get_to(sol.total_cost);
}

}  // namespace airkit::vrp
