#pragma once

#include <random>
#include <string>
#include <vector>

#include "airkit/sim/scenario.hpp"

namespace airkit::sim {

struct ParallelRunwayOptions {
  int gates{40};
  int arrivals_per_hour{30};
  int first_hour{6};
  int last_hour{22};                 // exclusive
  double pct_heavy{2.0};
  double pct_medium{96.0};
  double pct_light{2.0};
  RunwayMode mode{RunwayMode::Segregated};
  double approach_speed_kmh{250.0};
  std::uint64_t seed{1};
  int iterations{1};
};

/// Schematic two-runway airfield: one arrival runway fed from an airspace
/// fix through a holding stack, a taxi spine with two gate concourses, and a
/// departure runway behind a queue. Geometry is generic; no real airport is
/// implied. In mixed mode both runways serve both directions.
inline AirfieldGraph make_parallel_runway_airfield(int gates, RunwayMode mode) {
  AirfieldGraph g;
  auto node = [&](std::string id, NodeKind kind, double x, double y) {
    GraphNode n;
    n.id = std::move(id);
    n.kind = kind;
    n.x_m = x;
    n.y_m = y;
    return g.add_node(std::move(n));
  };
  const int fix1 = node("FIX1", NodeKind::AirspaceFix, -20000, 0);
  const int hold1 = node("HOLD1", NodeKind::HoldingStack, -9260, 0);
  const int thr1 = node("RWY1", NodeKind::RunwayThreshold, 0, 0);
  const int exit1 = node("X1", NodeKind::TaxiJunction, 2000, 200);
  const int j1 = node("J1", NodeKind::TaxiJunction, 2500, 600);
  const int j2 = node("J2", NodeKind::TaxiJunction, 3100, 600);
  const int j3 = node("J3", NodeKind::TaxiJunction, 3700, 600);
  const int dq2 = node("DQ2", NodeKind::DepartureQueue, 4500, 1000);
  const int thr2 = node("RWY2", NodeKind::RunwayThreshold, 4600, 1400);
  const int fix2 = node("FIX2", NodeKind::AirspaceFix, -20000, 1400);
  const int hold2 = node("HOLD2", NodeKind::HoldingStack, -9260, 1400);
  const int dq1 = node("DQ1", NodeKind::DepartureQueue, -100, 400);

  auto link = [&](int from, int to, double len, double kn, int lanes) {
    GraphLink l;
    l.from = from;
    l.to = to;
    l.length_m = len;
    l.speed_limit_kn = kn;
    l.lane_count = lanes;
    g.add_link(l);
  };
  // Airspace and runway 1.
  link(fix1, hold1, 10740, 300, 99);
  link(hold1, thr1, 9260, 300, 99);
  link(thr1, exit1, 2000, 30, 4);
  link(exit1, j1, 500, 15, 2);
  // Taxi spine, both directions.
  link(j1, j2, 600, 15, 2);
  link(j2, j1, 600, 15, 2);
  link(j2, j3, 600, 15, 2);
  link(j3, j2, 600, 15, 2);
  // Departure side.
  link(j3, dq2, 800, 15, 2);
  link(j1, dq1, 500, 15, 2);
  link(dq1, thr1, 100, 15, 1);
  link(dq2, thr2, 100, 15, 1);
  // Runway 2 arrival feed (used in mixed mode).
  link(fix2, hold2, 10740, 300, 99);
  link(hold2, thr2, 9260, 300, 99);
  const int exit2 = node("X2", NodeKind::TaxiJunction, 6600, 1200);
  link(thr2, exit2, 2000, 30, 4);
  link(exit2, j3, 600, 15, 2);

  for (int i = 0; i < gates; ++i) {
    GraphNode n;
    n.id = "G" + std::to_string(i + 1);
    n.kind = NodeKind::Gate;
    n.concourse = i % 2 == 0 ? "A" : "B";
    n.max_size = core::WtcClass::Heavy;  // numeric order: H < M < L, fits all
    const int parent = i % 2 == 0 ? j2 : j3;
    n.x_m = g.nodes[parent].x_m;
    n.y_m = 900 + 30.0 * i;
    const int gi = g.add_node(std::move(n));
    link(parent, gi, 150, 10, 1);
    link(gi, parent, 150, 10, 1);
  }

  Runway r1;
  r1.name = "RWY1";
  r1.threshold = thr1;
  r1.holding = hold1;
  r1.dep_queue = dq1;
  r1.serves_arrivals = true;
  r1.serves_departures = mode == RunwayMode::MixedParallel;
  Runway r2;
  r2.name = "RWY2";
  r2.threshold = thr2;
  r2.holding = hold2;
  r2.dep_queue = dq2;
  r2.serves_arrivals = mode == RunwayMode::MixedParallel;
  r2.serves_departures = true;
  g.runways.push_back(r1);
  g.runways.push_back(r2);
  return g;
}

inline core::Fleet synthetic_fleet() {
  core::Fleet fleet;
  auto add = [&](std::string code, double mtow, int seats, int engines, double ff, double hc,
                 double co, double nox) {
    core::AircraftType t;
    t.code = std::move(code);
    t.mtow_tonnes = mtow;
    t.seats = seats;
    t.engines = engines;
    t.fuel_flow_idle_kg_per_s = ff;
    t.ei_hc_g_per_kg = hc;
    t.ei_co_g_per_kg = co;
    t.ei_nox_g_per_kg = nox;
    fleet[t.code] = t;
  };
  add("H744", 397.0, 416, 4, 0.208, 1.92, 21.9, 4.8);
  add("M738", 70.5, 162, 2, 0.114, 2.28, 34.4, 3.9);
  add("LC208", 3.6, 9, 1, 0.019, 3.52, 27.7, 1.7);
  return fleet;
}

/// Synthetic schedule plus airfield matching a given hourly demand and WTC
/// mix. Every arrival is paired with a departure of the same carrier and
/// type 45 scheduled minutes later, so turnaround linking engages.
inline Scenario make_parallel_runway_scenario(const ParallelRunwayOptions& opt) {
  Scenario sc;
  sc.graph = make_parallel_runway_airfield(opt.gates, opt.mode);
  sc.mode = opt.mode;
  sc.fleet = synthetic_fleet();
  sc.default_approach_speed_kmh = opt.approach_speed_kmh;
  sc.seed = opt.seed;
  sc.iterations = opt.iterations;
  for (auto& f : sc.clone_factors) f = 1.0;

  std::mt19937_64 rng(opt.seed ^ 0xabcdef1234567890ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const core::CivilDate day{2017, 6, 14};
  int seqno = 0;
  for (int hour = opt.first_hour; hour < opt.last_hour; ++hour) {
    // Demand ramps over the first two hours like a real morning schedule;
    // a cold-start step would dump a turnaround backlog into one hour.
    int hourly = opt.arrivals_per_hour;
    if (hour == opt.first_hour) hourly = (hourly + 1) / 2;
    else if (hour == opt.first_hour + 1) hourly = (3 * hourly + 3) / 4;
    for (int k = 0; k < hourly; ++k) {
      const int minute = (k * 60) / hourly;
      const double dice = 100.0 * unit(rng);
      std::string code = dice < opt.pct_heavy ? "H744"
                         : dice < opt.pct_heavy + opt.pct_medium ? "M738"
                                                                 : "LC208";
      ++seqno;
      core::Flight arr;
      arr.flight_id = "AK" + std::to_string(1000 + seqno);
      arr.carrier = "AK";
      arr.tail = "T" + std::to_string(seqno);
      arr.origin = "AAA";
      arr.destination = "HUB";
      arr.direction = core::Direction::Arrival;
      arr.sched_time = core::to_utc(day, hour * 60 + minute, 0);
      arr.aircraft_code = code;
      arr.aircraft = sc.fleet.at(code);

      core::Flight dep = arr;
      dep.flight_id = "AK" + std::to_string(5000 + seqno);
      dep.origin = "HUB";
      dep.destination = "BBB";
      dep.direction = core::Direction::Departure;
      dep.sched_time = arr.sched_time + 45;

      sc.schedule.push_back(std::move(arr));
      sc.schedule.push_back(std::move(dep));
    }
  }
  return sc;
}

}  // namespace airkit::sim
