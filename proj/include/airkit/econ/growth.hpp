#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "airkit/core/types.hpp"

namespace airkit::econ {

/// Compound growth: value after n years at a constant annual rate (fraction).
inline double compound_growth(double base, double rate, double years) {
  if (!(rate > -1.0)) throw std::domain_error("rate must exceed -100%");
  return base * std::pow(1.0 + rate, years);
}

inline double growth_multiplier(double rate, double years) {
  return compound_growth(1.0, rate, years);
}

/// Origin x destination share matrix over a set of flights, in percent of
/// total movements. Shares sum to 100.
inline std::map<std::pair<std::string, std::string>, double> od_matrix(
    const std::vector<core::Flight>& flights) {
  std::map<std::pair<std::string, std::string>, double> counts;
  for (const auto& f : flights) ++counts[{f.origin, f.destination}];
  if (flights.empty()) return counts;
  const double total = static_cast<double>(flights.size());
  for (auto& [_, v] : counts) v = 100.0 * v / total;
  return counts;
}

}  // namespace airkit::econ
