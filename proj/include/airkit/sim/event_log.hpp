#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "airkit/capacity/separation.hpp"
#include "airkit/core/types.hpp"
#include "airkit/emissions/emissions.hpp"

namespace airkit::sim {

enum class EventType : std::uint8_t {
  Injection,
  HoldEnter,
  HoldExit,
  Touchdown,
  RunwayExit,
  LinkEnter,
  LinkExit,
  GateOn,
  GateOff,
  PushbackStart,
  PushbackEnd,
  DepQueueEnter,
  Takeoff,
};

inline const char* to_string(EventType t) {
  switch (t) {
    case EventType::Injection: return "injection";
    case EventType::HoldEnter: return "hold_enter";
    case EventType::HoldExit: return "hold_exit";
    case EventType::Touchdown: return "touchdown";
    case EventType::RunwayExit: return "runway_exit";
    case EventType::LinkEnter: return "link_enter";
    case EventType::LinkExit: return "link_exit";
    case EventType::GateOn: return "gate_on";
    case EventType::GateOff: return "gate_off";
    case EventType::PushbackStart: return "pushback_start";
    case EventType::PushbackEnd: return "pushback_end";
    case EventType::DepQueueEnter: return "dep_queue_enter";
    case EventType::Takeoff: return "takeoff";
  }
  return "?";
}

struct Event {
  int flight{0};        // index into LoggedFlight table
  EventType type{EventType::Injection};
  double t_s{0.0};      // seconds since midnight of the design day
  std::string node;     // node or link label
};

/// Delay attribution per flight, minutes.
struct DelayCauses {
  double airspace{0.0};
  double ground{0.0};
  double departure_queue{0.0};
  double gate{0.0};

  double total() const { return airspace + ground + departure_queue + gate; }
};

struct LoggedFlight {
  std::string flight_id;
  core::Direction direction{core::Direction::Arrival};
  core::WtcClass wtc{core::WtcClass::Medium};
  std::string aircraft_code;
  double approach_speed_kmh{250.0};
  double sched_s{0.0};
  std::string runway;
  DelayCauses delay;
  bool finished{false};
};

struct EventLog {
  std::vector<LoggedFlight> flights;
  std::vector<Event> events;

  void push(int flight, EventType type, double t_s, std::string node) {
    events.push_back({flight, type, t_s, std::move(node)});
  }
};

/// FNV-1a digest over the canonical event stream; identical scenarios and
/// seeds must produce identical digests.
inline std::uint64_t digest(const EventLog& log) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  char buf[64];
  for (const auto& e : log.events) {
    mix(log.flights[e.flight].flight_id);
    mix(to_string(e.type));
    std::snprintf(buf, sizeof buf, "%.3f", e.t_s);
    mix(buf);
    mix(e.node);
  }
  return h;
}

struct SeparationViolation {
  std::string runway;
  std::string leading;
  std::string trailing;
  double gap_s{0.0};
  double required_s{0.0};
  bool departure{false};
};

/// Independent log auditor: replay touchdowns and takeoffs per runway and
/// verify wake separation. Knows only the log and the policy, not the engine.
inline std::vector<SeparationViolation> audit_separation(const EventLog& log,
                                                         const cap::SeparationPolicy& policy,
                                                         double tolerance_s = 1e-6) {
  struct Use {
    double t{0.0};
    int flight{0};
  };
  std::map<std::string, std::vector<Use>> landings, takeoffs;
  for (const auto& e : log.events) {
    if (e.type == EventType::Touchdown) landings[e.node].push_back({e.t_s, e.flight});
    else if (e.type == EventType::Takeoff) takeoffs[e.node].push_back({e.t_s, e.flight});
  }
  std::vector<SeparationViolation> out;
  for (auto& [rwy, uses] : landings) {
    std::stable_sort(uses.begin(), uses.end(), [](const Use& a, const Use& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < uses.size(); ++i) {
      const auto& lead = log.flights[uses[i - 1].flight];
      const auto& trail = log.flights[uses[i].flight];
      const double nm = policy.arrival(lead.wtc, trail.wtc);
      const double required = nm * 1.852 / trail.approach_speed_kmh * 3600.0;
      const double gap = uses[i].t - uses[i - 1].t;
      if (gap + tolerance_s < required)
        out.push_back({rwy, lead.flight_id, trail.flight_id, gap, required, false});
    }
  }
  for (auto& [rwy, uses] : takeoffs) {
    std::stable_sort(uses.begin(), uses.end(), [](const Use& a, const Use& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < uses.size(); ++i) {
      const auto& lead = log.flights[uses[i - 1].flight];
      const auto& trail = log.flights[uses[i].flight];
      const double required = policy.departure(lead.wtc, trail.wtc);
      const double gap = uses[i].t - uses[i - 1].t;
      if (gap + tolerance_s < required)
        out.push_back({rwy, lead.flight_id, trail.flight_id, gap, required, true});
    }
  }
  return out;
}

/// Taxi-out spans (pushback start to departure-queue exit) for the emission
/// post-processor.
inline std::vector<emis::TaxiSpan> taxi_out_spans(const EventLog& log) {
  std::vector<double> start(log.flights.size(), -1.0), end(log.flights.size(), -1.0);
  std::vector<emis::TaxiSpan> spans;
  for (const auto& e : log.events) {
    if (e.type == EventType::PushbackStart) start[e.flight] = e.t_s;
    else if (e.type == EventType::Takeoff) end[e.flight] = e.t_s;
  }
  for (std::size_t i = 0; i < log.flights.size(); ++i) {
    if (start[i] < 0.0 || end[i] < 0.0) continue;
    spans.push_back({log.flights[i].aircraft_code, end[i] - start[i],
                     log.flights[i].delay.ground + log.flights[i].delay.departure_queue});
  }
  return spans;
}

struct LittlesMeasurement {
  double mean_queue_length{0.0};  // L, time average
  double arrival_rate{0.0};       // lambda, per minute
  double mean_wait_min{0.0};      // W
  int entries{0};
};

/// Measure L, lambda and W for the holding stacks over a time window.
inline LittlesMeasurement measure_holding_littles(const EventLog& log, double t0_s,
                                                  double t1_s) {
  std::vector<std::pair<double, int>> deltas;  // time, +1/-1
  std::vector<double> enter(log.flights.size(), -1.0);
  LittlesMeasurement m;
  double wait_sum = 0.0;
  for (const auto& e : log.events) {
    if (e.type == EventType::HoldEnter) {
      deltas.push_back({e.t_s, +1});
      enter[e.flight] = e.t_s;
    } else if (e.type == EventType::HoldExit) {
      deltas.push_back({e.t_s, -1});
      if (enter[e.flight] >= t0_s && enter[e.flight] < t1_s) {
        ++m.entries;
        wait_sum += e.t_s - enter[e.flight];
      }
    }
  }
  std::stable_sort(deltas.begin(), deltas.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  double level = 0.0, area = 0.0, prev = t0_s;
  for (const auto& [t, d] : deltas) {
    if (t < t0_s) {
      level += d;
      continue;
    }
    if (t >= t1_s) break;
    area += level * (t - prev);
    level += d;
    prev = t;
  }
  area += level * (t1_s - prev);
  const double window_min = (t1_s - t0_s) / 60.0;
  m.mean_queue_length = area / (t1_s - t0_s);
  m.arrival_rate = m.entries / window_min;
  m.mean_wait_min = m.entries > 0 ? wait_sum / m.entries / 60.0 : 0.0;
  return m;
}

inline void write_event_csv(std::ostream& out, const EventLog& log) {
  out << "flight_id,event,t_s,node\n";
  char buf[32];
  for (const auto& e : log.events) {
    std::snprintf(buf, sizeof buf, "%.3f", e.t_s);
    out << log.flights[e.flight].flight_id << ',' << to_string(e.type) << ',' << buf << ','
        << e.node << '\n';
  }
}

}  // namespace airkit::sim
