#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "airkit/core/types.hpp"

namespace airkit::sim {

enum class NodeKind : std::uint8_t {
  Gate,
  TaxiJunction,
  RunwayThreshold,
  DepartureQueue,
  AirspaceFix,
  HoldingStack,
};

inline std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Gate: return "gate";
    case NodeKind::TaxiJunction: return "taxi_junction";
    case NodeKind::RunwayThreshold: return "runway_threshold";
    case NodeKind::DepartureQueue: return "departure_queue";
    case NodeKind::AirspaceFix: return "airspace_fix";
    case NodeKind::HoldingStack: return "holding_stack";
  }
  return "?";
}

inline NodeKind node_kind_from_string(const std::string& s) {
  if (s == "gate") return NodeKind::Gate;
  if (s == "taxi_junction") return NodeKind::TaxiJunction;
  if (s == "runway_threshold") return NodeKind::RunwayThreshold;
  if (s == "departure_queue") return NodeKind::DepartureQueue;
  if (s == "airspace_fix") return NodeKind::AirspaceFix;
  if (s == "holding_stack") return NodeKind::HoldingStack;
  throw std::invalid_argument("unknown node kind: " + s);
}

struct GraphNode {
  std::string id;
  NodeKind kind{NodeKind::TaxiJunction};
  double x_m{0.0};
  double y_m{0.0};
  // Gate attributes.
  core::WtcClass max_size{core::WtcClass::Heavy};
  std::string concourse;
};

struct GraphLink {
  int from{0};
  int to{0};
  double length_m{0.0};
  double speed_limit_kn{15.0};
  int lane_count{1};
  /// Links sharing a group id model a single-lane segment used in both
  /// directions; occupancy is exclusive across the whole group.
  int shared_group{-1};
};

/// One runway: arrivals flow fix -> holding -> threshold, departures queue at
/// the departure queue node and take off from the threshold.
struct Runway {
  std::string name;
  int threshold{-1};
  int holding{-1};       // -1 when the runway serves no arrivals
  int dep_queue{-1};     // -1 when the runway serves no departures
  bool serves_arrivals{false};
  bool serves_departures{false};
};

class AirfieldGraph {
 public:
  std::vector<GraphNode> nodes;
  std::vector<GraphLink> links;
  std::vector<Runway> runways;

  int add_node(GraphNode n) {
    if (index_.count(n.id)) throw std::invalid_argument("duplicate node id: " + n.id);
    index_[n.id] = static_cast<int>(nodes.size());
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  int add_link(GraphLink l) {
    if (l.from < 0 || l.from >= static_cast<int>(nodes.size()) || l.to < 0 ||
        l.to >= static_cast<int>(nodes.size()))
      throw std::invalid_argument("link endpoint out of range");
    if (!(l.length_m >= 0.0) || !(l.speed_limit_kn > 0.0))
      throw std::invalid_argument("link needs non-negative length and positive speed");
    links.push_back(l);
    out_links_valid_ = false;
    return static_cast<int>(links.size()) - 1;
  }

  int node_id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown node: " + name);
    return it->second;
  }

  const std::vector<int>& out_links(int node) const {
    rebuild_adjacency();
    return out_links_[node];
  }

  /// Shortest-time path (link ids) between taxi nodes at link speed limits.
  /// Returns empty when unreachable.
  std::vector<int> shortest_path(int from, int to) const {
    rebuild_adjacency();
    const auto key = std::make_pair(from, to);
    auto cached = path_cache_.find(key);
    if (cached != path_cache_.end()) return cached->second;

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(nodes.size(), inf);
    std::vector<int> via(nodes.size(), -1);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[from] = 0.0;
    pq.push({0.0, from});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      if (u == to) break;
      for (int li : out_links_[u]) {
        const auto& l = links[li];
        const double t = l.length_m / (l.speed_limit_kn * 0.514444);
        if (dist[u] + t < dist[l.to]) {
          dist[l.to] = dist[u] + t;
          via[l.to] = li;
          pq.push({dist[l.to], l.to});
        }
      }
    }
    std::vector<int> path;
    if (dist[to] == inf) {
      path_cache_[key] = path;
      return path;
    }
    for (int at = to; at != from;) {
      path.push_back(via[at]);
      at = links[via[at]].from;
    }
    std::reverse(path.begin(), path.end());
    path_cache_[key] = path;
    return path;
  }

  std::vector<int> gate_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (nodes[i].kind == NodeKind::Gate) out.push_back(i);
    return out;
  }

  /// Every gate must reach some departure queue and be reachable from some
  /// runway exit; throws otherwise.
  void validate() const {
    std::vector<int> queues, exits;
    for (const auto& r : runways) {
      if (r.serves_departures && r.dep_queue >= 0) queues.push_back(r.dep_queue);
      if (r.serves_arrivals && r.threshold >= 0) exits.push_back(r.threshold);
    }
    if (queues.empty() && exits.empty())
      throw std::invalid_argument("airfield has no active runways");
    for (int g : gate_ids()) {
      bool can_depart = queues.empty();
      for (int q : queues)
        if (!shortest_path(g, q).empty()) { can_depart = true; break; }
      if (!can_depart)
        throw std::invalid_argument("gate " + nodes[g].id + " cannot reach a departure queue");
      bool reachable = exits.empty();
      for (int e : exits)
        if (!shortest_path(e, g).empty()) { reachable = true; break; }
      if (!reachable)
        throw std::invalid_argument("gate " + nodes[g].id + " unreachable from runway exits");
    }
  }

 private:
  void rebuild_adjacency() const {
    if (out_links_valid_) return;
    out_links_.assign(nodes.size(), {});
    for (int i = 0; i < static_cast<int>(links.size()); ++i)
      out_links_[links[i].from].push_back(i);
    out_links_valid_ = true;
    path_cache_.clear();
  }

  std::map<std::string, int> index_;
  mutable std::vector<std::vector<int>> out_links_;
  mutable bool out_links_valid_{false};
  mutable std::map<std::pair<int, int>, std::vector<int>> path_cache_;
};

inline void to_json(nlohmann::json& j, const AirfieldGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : g.nodes)
    nodes.push_back({{"id", n.id},
                     {"kind", to_string(n.kind)},
                     {"x_m", n.x_m},
                     {"y_m", n.y_m},
                     {"max_size", std::string(1, core::wtc_letter(n.max_size))},
                     {"concourse", n.concourse}});
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : g.links)
    links.push_back({{"from", g.nodes[l.from].id},
                     {"to", g.nodes[l.to].id},
                     {"length_m", l.length_m},
                     {"speed_limit_kn", l.speed_limit_kn},
                     {"lane_count", l.lane_count},
                     {"shared_group", l.shared_group}});
  nlohmann::json runways = nlohmann::json::array();
  for (const auto& r : g.runways)
    runways.push_back(
        {{"name", r.name},
         {"threshold", r.threshold >= 0 ? g.nodes[r.threshold].id : ""},
         {"holding", r.holding >= 0 ? g.nodes[r.holding].id : ""},
         {"dep_queue", r.dep_queue >= 0 ? g.nodes[r.dep_queue].id : ""},
         {"serves_arrivals", r.serves_arrivals},
         {"serves_departures", r.serves_departures}});
  j = nlohmann::json{{"nodes", nodes}, {"links", links}, {"runways", runways}};
}

inline void from_json(const nlohmann::json& j, AirfieldGraph& g) {
  g = AirfieldGraph{};
  for (const auto& n : j.at("nodes")) {
    GraphNode node;
    node.id = n.at("id").get<std::string>();
    node.kind = node_kind_from_string(n.at("kind").get<std::string>());
    node.x_m = n.value("x_m", 0.0);
    node.y_m = n.value("y_m", 0.0);
    const std::string size = n.value("max_size", "H");
    node.max_size = core::wtc_from_letter(size.empty() ? 'H' : size[0]);
    node.concourse = n.value("concourse", "");
    g.add_node(std::move(node));
  }
  for (const auto& l : j.at("links")) {
    GraphLink link;
    link.from = g.node_id(l.at("from").get<std::string>());
    link.to = g.node_id(l.at("to").get<std::string>());
    link.length_m = l.at("length_m").get<double>();
    link.speed_limit_kn = l.value("speed_limit_kn", 15.0);
    link.lane_count = l.value("lane_count", 1);
    link.shared_group = l.value("shared_group", -1);
    g.add_link(link);
  }
  for (const auto& r : j.at("runways")) {
    Runway rw;
    rw.name = r.at("name").get<std::string>();
    const auto id_or = [&](const char* key) {
      const std::string s = r.value(key, "");
      return s.empty() ? -1 : g.node_id(s);
    };
    rw.threshold = id_or("threshold");
    rw.holding = id_or("holding");
    rw.dep_queue = id_or("dep_queue");
    rw.serves_arrivals = r.value("serves_arrivals", false);
    rw.serves_departures = r.value("serves_departures", false);
    g.runways.push_back(rw);
  }
}

}  // namespace airkit::sim
