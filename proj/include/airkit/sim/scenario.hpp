#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "airkit/capacity/separation.hpp"
#include "airkit/core/schedule.hpp"
#include "airkit/core/turnaround.hpp"
#include "airkit/core/types.hpp"
#include "airkit/sim/airfield.hpp"

namespace airkit::sim {

enum class RunwayMode : std::uint8_t { Segregated, MixedParallel };

/// Complete simulation input. All thresholds are explicit; nothing is
/// hardcoded inside the engine.
struct Scenario {
  std::vector<core::Flight> schedule;
  core::Fleet fleet;
  AirfieldGraph graph;
  cap::SeparationPolicy separation = cap::default_separation_policy();
  RunwayMode mode{RunwayMode::Segregated};

  std::array<double, 24> clone_factors{};  // expected clones per flight per hour
  double injection_jitter_lo_min{0.0};
  double injection_jitter_hi_min{15.0};
  double los_threshold_min{5.0};
  double turnaround_min{15.0};
  double pushback_s{180.0};
  double runway_clear_buffer_s{30.0};
  double gridlock_threshold_min{60.0};
  double default_approach_speed_kmh{250.0};
  double default_taxi_speed_kn{15.0};
  core::TurnaroundMatcher turnaround_matcher{core::TurnaroundMatcher::CarrierAndType};

  std::uint64_t seed{1};
  int iterations{1};

  void validate() const {
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    for (double f : clone_factors)
      if (!(f >= 0.0) || !std::isfinite(f))
        throw std::invalid_argument("clone factors must be finite and non-negative");
    separation.validate();
    graph.validate();
  }
};

/// Derive the iteration RNG stream from the scenario seed (splitmix64 step).
inline std::uint64_t iteration_seed(std::uint64_t seed, int iteration) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(iteration + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Duplicate flights per the hourly clone table: with factor f, each flight
/// gains floor(f) copies plus one more with probability frac(f). Factors
/// above 1 are expected counts, not probabilities. Clone times are
/// re-jittered inside the injection window so copies spread out.
inline std::vector<core::Flight> clone_flights(const std::vector<core::Flight>& schedule,
                                               const std::array<double, 24>& factors,
                                               std::mt19937_64& rng,
                                               double jitter_hi_min = 15.0) {
  std::vector<core::Flight> out;
  out.reserve(schedule.size() * 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& f : schedule) {
    out.push_back(f);
    const double factor = factors[core::hour_of_day(f.sched_time)];
    int copies = static_cast<int>(std::floor(factor));
    const double frac = factor - std::floor(factor);
    if (frac > 0.0 && unit(rng) < frac) ++copies;
    for (int c = 0; c < copies; ++c) {
      core::Flight clone = f;
      clone.flight_id = f.flight_id + "+C" + std::to_string(c + 1);
      if (clone.tail) *clone.tail += "C" + std::to_string(c + 1);
      const auto shift =
          static_cast<std::int64_t>(std::floor(unit(rng) * (jitter_hi_min + 1.0)));
      clone.sched_time = clone.sched_time + std::min<std::int64_t>(
                             shift, static_cast<std::int64_t>(jitter_hi_min));
      out.push_back(std::move(clone));
    }
  }
  return out;
}

inline void to_json(nlohmann::json& j, const Scenario& s) {
  std::ostringstream sched;
  core::serialize_schedule(sched, s.schedule);
  nlohmann::json fleet = nlohmann::json::array();
  for (const auto& [code, t] : s.fleet)
    fleet.push_back({{"code", code},
                     {"mtow_tonnes", t.mtow_tonnes},
                     {"seats", t.seats},
                     {"engines", t.engines},
                     {"fuel_flow_idle_kg_per_s", t.fuel_flow_idle_kg_per_s},
                     {"ei_hc_g_per_kg", t.ei_hc_g_per_kg},
                     {"ei_co_g_per_kg", t.ei_co_g_per_kg},
                     {"ei_nox_g_per_kg", t.ei_nox_g_per_kg}});
  j = nlohmann::json{
      {"schedule_csv", sched.str()},
      {"fleet", fleet},
      {"graph", s.graph},
      {"separation", s.separation},
      {"mode", s.mode == RunwayMode::Segregated ? "segregated" : "mixed_parallel"},
      {"clone_factors", s.clone_factors},
      {"injection_jitter_min", {s.injection_jitter_lo_min, s.injection_jitter_hi_min}},
      {"los_threshold_min", s.los_threshold_min},
      {"turnaround_min", s.turnaround_min},
      {"pushback_s", s.pushback_s},
      {"runway_clear_buffer_s", s.runway_clear_buffer_s},
      {"gridlock_threshold_min", s.gridlock_threshold_min},
      {"default_approach_speed_kmh", s.default_approach_speed_kmh},
      {"default_taxi_speed_kn", s.default_taxi_speed_kn},
      {"turnaround_matcher",
       s.turnaround_matcher == core::TurnaroundMatcher::ExactTail ? "tail" : "carrier_type"},
      {"seed", s.seed},
      {"iterations", s.iterations}};
}

inline void from_json(const nlohmann::json& j, Scenario& s) {
  if (j.contains("fleet")) {
    for (const auto& t : j.at("fleet")) {
      core::AircraftType a;
      a.code = t.at("code").get<std::string>();
      a.mtow_tonnes = t.value("mtow_tonnes", 70.0);
      a.seats = t.value("seats", 0);
      a.engines = t.value("engines", 2);
      a.fuel_flow_idle_kg_per_s = t.value("fuel_flow_idle_kg_per_s", 0.0);
      a.ei_hc_g_per_kg = t.value("ei_hc_g_per_kg", 0.0);
      a.ei_co_g_per_kg = t.value("ei_co_g_per_kg", 0.0);
      a.ei_nox_g_per_kg = t.value("ei_nox_g_per_kg", 0.0);
      s.fleet[a.code] = a;
    }
  }
  if (j.contains("schedule_csv")) {
    std::istringstream in(j.at("schedule_csv").get<std::string>());
    auto parsed = core::parse_schedule(in, &s.fleet);
    if (!parsed.errors.empty())
      throw std::invalid_argument("scenario schedule has " +
                                  std::to_string(parsed.errors.size()) + " malformed rows");
    s.schedule = std::move(parsed.flights);
  }
  j.at("graph").get_to(s.graph);
  if (j.contains("separation")) j.at("separation").get_to(s.separation);
  s.mode = j.value("mode", "segregated") == "mixed_parallel" ? RunwayMode::MixedParallel
                                                             : RunwayMode::Segregated;
  if (j.contains("clone_factors")) j.at("clone_factors").get_to(s.clone_factors);
  if (j.contains("injection_jitter_min")) {
    s.injection_jitter_lo_min = j.at("injection_jitter_min").at(0).get<double>();
    s.injection_jitter_hi_min = j.at("injection_jitter_min").at(1).get<double>();
  }
  s.los_threshold_min = j.value("los_threshold_min", 5.0);
  s.turnaround_min = j.value("turnaround_min", 15.0);
  s.pushback_s = j.value("pushback_s", 180.0);
  s.runway_clear_buffer_s = j.value("runway_clear_buffer_s", 30.0);
  s.gridlock_threshold_min = j.value("gridlock_threshold_min", 60.0);
  s.default_approach_speed_kmh = j.value("default_approach_speed_kmh", 250.0);
  s.default_taxi_speed_kn = j.value("default_taxi_speed_kn", 15.0);
  s.turnaround_matcher = j.value("turnaround_matcher", "carrier_type") == std::string("tail")
                             ? core::TurnaroundMatcher::ExactTail
                             : core::TurnaroundMatcher::CarrierAndType;
  s.seed = j.value("seed", 1ULL);
  s.iterations = j.value("iterations", 1);
}

}  // namespace airkit::sim
