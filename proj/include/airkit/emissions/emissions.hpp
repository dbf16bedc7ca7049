#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "airkit/core/types.hpp"

namespace airkit::emis {

/// Kilograms of CO2 per kilogram of burned fuel.
inline constexpr double kCo2PerFuelKg = 3.157;

/// Ground emissions of a single taxi-out, all masses per flight.
struct FlightEmissions {
  double fuel_kg{0.0};
  double hc_g{0.0};
  double co_g{0.0};
  double nox_g{0.0};
  double co2_kg{0.0};
};

/// Fuel burn at idle thrust over the taxi span, then indices per kilogram of
/// fuel, engine count applied, CO2 from fuel mass.
inline FlightEmissions flight_emissions(double taxi_seconds, const core::AircraftType& type) {
  if (taxi_seconds < 0.0) throw std::invalid_argument("taxi time must be non-negative");
  FlightEmissions e;
  e.fuel_kg = taxi_seconds * type.fuel_flow_idle_kg_per_s * type.engines;
  e.hc_g = e.fuel_kg * type.ei_hc_g_per_kg;
  e.co_g = e.fuel_kg * type.ei_co_g_per_kg;
  e.nox_g = e.fuel_kg * type.ei_nox_g_per_kg;
  e.co2_kg = e.fuel_kg * kCo2PerFuelKg;
  return e;
}

/// Daily totals for one simulation iteration, in the units of the summary
/// table: tonnes for fuel and CO2, kilograms for HC/CO/NOx.
struct EmissionTotals {
  int iteration{0};
  double taxi_out_min{0.0};
  double fuel_t{0.0};
  double hc_kg{0.0};
  double co_kg{0.0};
  double nox_kg{0.0};
  double co2_t{0.0};
  double ground_delay_min{0.0};
  int departures{0};

  void add(double taxi_seconds, const FlightEmissions& e) {
    taxi_out_min += taxi_seconds / 60.0;
    fuel_t += e.fuel_kg / 1000.0;
    hc_kg += e.hc_g / 1000.0;
    co_kg += e.co_g / 1000.0;
    nox_kg += e.nox_g / 1000.0;
    co2_t += e.co2_kg / 1000.0;
    ++departures;
  }
};

/// Order iterations best-first: CO2, then fuel, then ground delay.
inline std::vector<EmissionTotals> rank_iterations(std::vector<EmissionTotals> totals) {
  std::stable_sort(totals.begin(), totals.end(),
                   [](const EmissionTotals& a, const EmissionTotals& b) {
                     if (a.co2_t != b.co2_t) return a.co2_t < b.co2_t;
                     if (a.fuel_t != b.fuel_t) return a.fuel_t < b.fuel_t;
                     return a.ground_delay_min < b.ground_delay_min;
                   });
  return totals;
}

/// Off-block to brakes-release span of one departure, as read from a
/// simulation event log.
struct TaxiSpan {
  std::string aircraft_code;
  double taxi_seconds{0.0};
  double ground_delay_min{0.0};
};

/// Sum per-departure emissions over one iteration's taxi-out spans.
inline EmissionTotals aggregate_iteration(const std::vector<TaxiSpan>& spans,
                                          const core::Fleet& fleet, int iteration = 0) {
  EmissionTotals totals;
  totals.iteration = iteration;
  for (const auto& s : spans) {
    auto it = fleet.find(s.aircraft_code);
    if (it == fleet.end())
      throw std::invalid_argument("aircraft type not in fleet: " + s.aircraft_code);
    totals.add(s.taxi_seconds, flight_emissions(s.taxi_seconds, it->second));
    totals.ground_delay_min += s.ground_delay_min;
  }
  return totals;
}

enum class Daytime { Day, Evening, Night };

inline double daytime_penalty_db(Daytime d) {
  switch (d) {
    case Daytime::Day: return 0.0;
    case Daytime::Evening: return 5.0;
    case Daytime::Night: return 10.0;
  }
  return 0.0;
}

/// Noise quota units from certified effective perceived noise: the level is
/// linearized around the 84 dB normalization point with a time-of-day penalty.
inline double eqc(double epndb, Daytime daytime) {
  if (!std::isfinite(epndb)) throw std::invalid_argument("EPNdB must be finite");
  return 0.25 * std::pow(10.0, 0.1 * (epndb - 84.0 + daytime_penalty_db(daytime)));
}

}  // namespace airkit::emis
