#pragma once

#include <array>
#include <optional>
#include <vector>

#include "airkit/perf/delay_fit.hpp"
#include "airkit/sim/engine.hpp"

namespace airkit::sim {

struct SweepStep {
  double growth_pct{0.0};
  bool saturated{false};  // every iteration gridlocked
  int iterations_used{0};
  double daily_flights{0.0};   // mean movements over gridlock-free iterations
  double avg_delay_min{0.0};
  std::array<double, 24> hourly_counts{};
  std::array<double, 24> hourly_mean_delay{};
};

struct SweepResult {
  std::vector<SweepStep> steps;

  std::vector<perf::DelayPoint> delay_points() const {
    std::vector<perf::DelayPoint> pts;
    for (const auto& s : steps)
      if (!s.saturated) pts.push_back({s.daily_flights, s.avg_delay_min});
    return pts;
  }
};

/// Scale the clone table to a growth step: 100% applies the scenario's clone
/// factors as-is, 0% disables cloning, 200% doubles the expected clones.
inline std::array<double, 24> scale_clone_factors(const std::array<double, 24>& base,
                                                  double growth_pct) {
  std::array<double, 24> out{};
  for (std::size_t h = 0; h < out.size(); ++h) out[h] = base[h] * growth_pct / 100.0;
  return out;
}

/// Run the scenario at each growth step and aggregate gridlock-free
/// iterations. A fully gridlocked step is reported saturated and the sweep
/// continues.
inline SweepResult growth_sweep(const Scenario& scenario,
                                const std::vector<double>& growth_steps_pct,
                                bool parallel = false,
                                std::vector<SimulationOutput>* raw = nullptr) {
  SweepResult result;
  for (double step : growth_steps_pct) {
    Scenario run = scenario;
    run.clone_factors = scale_clone_factors(scenario.clone_factors, step);
    auto output = simulate(run, parallel);

    SweepStep s;
    s.growth_pct = step;
    double flights = 0.0, delay = 0.0;
    for (const auto& r : output.results) {
      if (!r.completed) continue;
      ++s.iterations_used;
      flights += r.daily_flights_served;
      delay += r.mean_delay_min;
      for (int h = 0; h < 24; ++h) {
        s.hourly_counts[h] += r.hourly_counts[h];
        s.hourly_mean_delay[h] += r.hourly_mean_delay[h];
      }
    }
    if (s.iterations_used == 0) {
      s.saturated = true;
    } else {
      const double n = s.iterations_used;
      s.daily_flights = flights / n;
      s.avg_delay_min = delay / n;
      for (int h = 0; h < 24; ++h) {
        s.hourly_counts[h] /= n;
        s.hourly_mean_delay[h] /= n;
      }
    }
    result.steps.push_back(s);
    if (raw) raw->push_back(std::move(output));
  }
  return result;
}

struct DelayBreakdown {
  bool defined{false};
  // Shares in percent, summing to 100 per direction when defined.
  DelayCauses arrival_pct;
  DelayCauses departure_pct;
};

/// Cause shares over completed iterations, split by direction.
inline DelayBreakdown delay_breakdown(const std::vector<IterationResult>& results) {
  DelayCauses arr, dep;
  bool any = false;
  for (const auto& r : results) {
    if (!r.completed) continue;
    any = true;
    arr.airspace += r.arrival_totals.airspace;
    arr.ground += r.arrival_totals.ground;
    arr.gate += r.arrival_totals.gate;
    arr.departure_queue += r.arrival_totals.departure_queue;
    dep.airspace += r.departure_totals.airspace;
    dep.ground += r.departure_totals.ground;
    dep.gate += r.departure_totals.gate;
    dep.departure_queue += r.departure_totals.departure_queue;
  }
  if (!any) throw std::invalid_argument("no completed iterations");
  DelayBreakdown out;
  auto to_pct = [](const DelayCauses& c) {
    DelayCauses pct;
    const double total = c.total();
    if (total <= 0.0) return std::pair{pct, false};
    pct.airspace = 100.0 * c.airspace / total;
    pct.ground = 100.0 * c.ground / total;
    pct.gate = 100.0 * c.gate / total;
    pct.departure_queue = 100.0 * c.departure_queue / total;
    return std::pair{pct, true};
  };
  const auto [apct, adef] = to_pct(arr);
  const auto [dpct, ddef] = to_pct(dep);
  out.arrival_pct = apct;
  out.departure_pct = dpct;
  out.defined = adef || ddef;
  return out;
}

}  // namespace airkit::sim
