#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "airkit/core/types.hpp"

namespace airkit::net {

/// Carrier route map for one month: per airport the set of distinct directed
/// destinations served by the carrier from there.
struct CarrierNetwork {
  std::string carrier;
  int year{0};
  unsigned month{1};
  std::set<std::string> airports;
  std::map<std::string, std::set<std::string>> dests;

  std::size_t n_airports() const { return airports.size(); }
  std::size_t sum_k() const {
    std::size_t k = 0;
    for (const auto& [_, d] : dests) k += d.size();
    return k;
  }
};

/// Connectivity index: sum of per-airport destination counts over N(N-1),
/// times 100. 100 on a complete directed graph; near zero for a large star.
inline double cindex(const CarrierNetwork& net) {
  const double n = static_cast<double>(net.n_airports());
  if (n < 2.0) throw std::domain_error("cindex undefined for fewer than 2 airports");
  return 100.0 * static_cast<double>(net.sum_k()) / (n * (n - 1.0));
}

/// Group flights into monthly carrier networks. Destinations are counted as
/// distinct directed city pairs regardless of frequency.
inline std::vector<CarrierNetwork> build_carrier_networks(
    const std::vector<core::Flight>& flights) {
  std::map<std::tuple<std::string, int, unsigned>, CarrierNetwork> nets;
  for (const auto& f : flights) {
    const auto date = core::date_of(f.sched_time);
    auto& net = nets[{f.carrier, date.year, date.month}];
    net.carrier = f.carrier;
    net.year = date.year;
    net.month = date.month;
    net.airports.insert(f.origin);
    net.airports.insert(f.destination);
    net.dests[f.origin].insert(f.destination);
  }
  std::vector<CarrierNetwork> out;
  out.reserve(nets.size());
  for (auto& [_, n] : nets) out.push_back(std::move(n));
  return out;
}

enum class NetworkClass { HubAndSpoke, Hybrid, PointToPoint };

inline std::string to_string(NetworkClass c) {
  switch (c) {
    case NetworkClass::HubAndSpoke: return "H&S";
    case NetworkClass::Hybrid: return "Hybrid";
    case NetworkClass::PointToPoint: return "P2P";
  }
  return "?";
}

/// Tercile split of Cindex values: at or below the 33rd percentile is
/// hub-and-spoke, above the 66th is point-to-point, in between hybrid.
/// Percentiles use the nearest-rank convention.
inline std::vector<NetworkClass> classify(const std::vector<double>& cindex_values) {
  if (cindex_values.size() < 3) throw std::invalid_argument("need at least 3 observations");
  std::vector<double> sorted = cindex_values;
  std::sort(sorted.begin(), sorted.end());
  auto nearest_rank = [&](double pct) {
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
  };
  const double p33 = nearest_rank(33.0);
  const double p66 = nearest_rank(66.0);
  std::vector<NetworkClass> out;
  out.reserve(cindex_values.size());
  for (double v : cindex_values) {
    if (v <= p33) out.push_back(NetworkClass::HubAndSpoke);
    else if (v <= p66) out.push_back(NetworkClass::Hybrid);
    else out.push_back(NetworkClass::PointToPoint);
  }
  return out;
}

/// Per-flight flag: origin is a hub of the operating carrier. Dual-city hubs
/// are supported by listing several airports per carrier.
inline std::vector<bool> hub_flags(const std::vector<core::Flight>& flights,
                                   const std::map<std::string, std::set<std::string>>& hub_map) {
  std::vector<bool> out;
  out.reserve(flights.size());
  for (const auto& f : flights) {
    auto it = hub_map.find(f.carrier);
    out.push_back(it != hub_map.end() && it->second.count(f.origin) > 0);
  }
  return out;
}

}  // namespace airkit::net
