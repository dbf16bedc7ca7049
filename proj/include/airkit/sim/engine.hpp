#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "airkit/sim/event_log.hpp"
#include "airkit/sim/scenario.hpp"

namespace airkit::sim {

struct IterationResult {
  std::uint64_t seed_used{0};
  bool completed{false};
  bool gridlocked{false};
  int injected{0};
  int daily_flights_served{0};  // runway movements (touchdowns + takeoffs)
  int arrivals_served{0};
  int departures_served{0};
  /// Movements in hours 0-23 of the design day; congestion can spill past
  /// midnight, so the sum may be below daily_flights_served.
  std::array<int, 24> hourly_counts{};
  std::array<double, 24> hourly_mean_delay{};
  int peak_hourly_movements{0};  // max over absolute hours, spillover included
  std::vector<int> hourly_movements;  // per absolute hour, index 0 = midnight
  DelayCauses arrival_totals;
  DelayCauses departure_totals;
  double mean_delay_min{0.0};

  /// Highest rate held over `window` consecutive hours: the stable-flow
  /// capacity reading, insensitive to single-hour queue-release bursts.
  int sustained_hourly_throughput(int window = 2) const {
    int best = 0;
    if (window < 1) window = 1;
    for (std::size_t h = 0; h + window <= hourly_movements.size(); ++h) {
      int low = hourly_movements[h];
      for (int k = 1; k < window; ++k)
        low = std::min(low, hourly_movements[h + k]);
      best = std::max(best, low);
    }
    return best;
  }
};

struct SimulationOutput {
  std::vector<IterationResult> results;
  std::vector<EventLog> logs;
};

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kKnToMps = 0.514444;
constexpr double kFollowGapS = 5.0;

enum class Phase {
  ArrEnroute,
  ArrHolding,
  ArrFinal,
  ArrTaxi,
  ArrWaitGate,
  ArrDone,
  DepDormant,
  DepWaitPushback,
  DepPushback,
  DepTaxi,
  DepQueued,
  DepDone,
};

struct SimFlight {
  int id{0};  // index into log flight table
  core::Direction dir{core::Direction::Arrival};
  core::WtcClass wtc{core::WtcClass::Medium};
  double approach_mps{69.4};
  double taxi_limit_mps{7.7};
  double sched_s{0.0};
  double inject_s{0.0};
  int runway{-1};
  int linked{-1};  // partner flight index, -1 when unlinked

  Phase phase{Phase::ArrEnroute};
  int gate{-1};
  std::vector<int> path;
  std::size_t path_pos{0};
  int current_link{-1};
  bool gate_pending{false};

  double unimpeded_taxi_s{0.0};
  double freeflow_landing_s{0.0};
  double touchdown_s{0.0};
  double gate_wait_start_s{-1.0};
  double gate_wait_s{0.0};
  double ready_s{0.0};
  double pushback_wait_start_s{-1.0};
  double pushback_start_s{0.0};
  double queue_enter_s{0.0};
  double gate_on_s{0.0};

  // Blocking bookkeeping for gridlock detection.
  int waiting_link{-1};
  bool waiting_gate{false};
  double wait_since_s{-1.0};
  bool at_link_end{false};  // reached the far node but a leader is ahead
};

struct LinkState {
  std::deque<int> occupants;          // flights on the link, entry order
  double last_scheduled_exit{-kInf};  // keeps followers behind leaders
  std::deque<std::pair<std::uint64_t, int>> waiters;  // (request seq, flight)
};

struct RunwayState {
  double last_landing_t{-kInf};
  core::WtcClass last_landing_wtc{core::WtcClass::Medium};
  double last_takeoff_t{-kInf};
  core::WtcClass last_takeoff_wtc{core::WtcClass::Medium};
  double last_commit_t{-kInf};
  core::WtcClass last_commit_wtc{core::WtcClass::Medium};
  std::deque<std::pair<double, int>> committed_landings;  // (time, flight)
  std::deque<int> dep_queue;
  bool dep_busy{false};
};

struct PendingEvent {
  double t{0.0};
  std::uint64_t seq{0};
  int kind{0};  // 0 inject, 1 hold-enter, 2 hold-exit, 3 touchdown, 4 node-arrive,
                // 5 pushback-end, 6 takeoff, 7 dep-ready, 8 wait-check
  int flight{-1};
  int aux{-1};

  bool operator>(const PendingEvent& o) const {
    if (t != o.t) return t > o.t;
    return seq > o.seq;
  }
};

/// One simulation iteration: strictly sequential, event-time ordered.
class Iteration {
 public:
  Iteration(const Scenario& scenario, int index)
      : sc_(scenario),
        // Private copy: path lookups cache internally, so iterations running
        // on separate threads must not share one graph.
        graph_(scenario.graph),
        rng_(iteration_seed(scenario.seed, index)) {
    result_.seed_used = iteration_seed(scenario.seed, index);
  }

  void run(IterationResult& result, EventLog& log) {
    build_flights();
    links_.assign(graph_.links.size(), {});
    runways_.assign(graph_.runways.size(), {});
    gate_occupant_.assign(graph_.nodes.size(), -1);

    for (int i = 0; i < static_cast<int>(flights_.size()); ++i) {
      auto& f = flights_[i];
      if (f.dir == core::Direction::Arrival) {
        push_event(f.inject_s, 0, i);
      } else if (f.linked < 0) {
        push_event(f.ready_s, 7, i);
      }
      ++result_.injected;
    }

    while (!events_.empty() && !result_.gridlocked) {
      const auto ev = events_.top();
      events_.pop();
      now_ = ev.t;
      dispatch(ev);
    }

    finalize();
    result = result_;
    log = std::move(log_);
  }

 private:
  // ---- setup ----------------------------------------------------------

  void build_flights() {
    auto cloned = clone_flights(sc_.schedule, sc_.clone_factors, rng_,
                                sc_.injection_jitter_hi_min);
    day0_min_ = std::numeric_limits<std::int64_t>::max();
    for (const auto& f : cloned) {
      const auto d = core::date_of(f.sched_time);
      day0_min_ = std::min(day0_min_, core::days_since_epoch(d) * 1440);
    }
    if (cloned.empty()) day0_min_ = 0;

    std::vector<core::Flight> arrivals, departures;
    for (const auto& f : cloned)
      (f.direction == core::Direction::Arrival ? arrivals : departures).push_back(f);
    const auto links =
        core::link_turnarounds(arrivals, departures, static_cast<int>(sc_.turnaround_min),
                               sc_.turnaround_matcher);
    std::map<std::string, std::string> dep_of_arr;
    for (const auto& [arr, dep] : links.pairs) dep_of_arr[arr.flight_id] = dep.flight_id;

    std::uniform_real_distribution<double> jitter(sc_.injection_jitter_lo_min * 60.0,
                                                  sc_.injection_jitter_hi_min * 60.0);
    std::map<std::string, int> index_of;
    for (const auto& f : cloned) {
      SimFlight sf;
      sf.id = static_cast<int>(flights_.size());
      sf.dir = f.direction;
      sf.wtc = f.aircraft ? f.aircraft->wtc() : core::WtcClass::Medium;
      sf.approach_mps = sc_.default_approach_speed_kmh / 3.6;
      sf.taxi_limit_mps = sc_.default_taxi_speed_kn * kKnToMps;
      sf.sched_s = static_cast<double>((f.sched_time.value - day0_min_) * 60);
      const double j = jitter(rng_);
      sf.inject_s = sf.sched_s + j;
      sf.ready_s = sf.inject_s;  // departures: pushback no earlier than sched + jitter
      sf.phase = sf.dir == core::Direction::Arrival ? Phase::ArrEnroute : Phase::DepDormant;

      LoggedFlight lf;
      lf.flight_id = f.flight_id;
      lf.direction = f.direction;
      lf.wtc = sf.wtc;
      lf.aircraft_code = f.aircraft_code;
      lf.approach_speed_kmh = sc_.default_approach_speed_kmh;
      lf.sched_s = sf.sched_s;
      log_.flights.push_back(std::move(lf));
      index_of[f.flight_id] = sf.id;
      flights_.push_back(std::move(sf));
    }
    for (const auto& [arr_id, dep_id] : dep_of_arr) {
      const int a = index_of.at(arr_id);
      const int d = index_of.at(dep_id);
      flights_[a].linked = d;
      flights_[d].linked = a;
    }

    // Deterministic round-robin gates for unlinked departures; they spawn on
    // the apron at ready time and only contend for the pushback link.
    const auto gates = graph_.gate_ids();
    std::size_t cursor = 0;
    for (auto& f : flights_) {
      if (f.dir != core::Direction::Departure || f.linked >= 0) continue;
      if (gates.empty()) throw std::invalid_argument("departure scheduled but no gates");
      for (std::size_t k = 0; k < gates.size(); ++k) {
        const int g = gates[(cursor + k) % gates.size()];
        if (fits_gate(f, g)) {
          f.gate = g;
          cursor = (cursor + k + 1) % gates.size();
          break;
        }
      }
      if (f.gate < 0)
        throw std::invalid_argument("no gate size-compatible with departure " +
                                    log_.flights[f.id].flight_id);
    }
  }

  bool fits_gate(const SimFlight& f, int gate) const {
    return static_cast<int>(f.wtc) >= static_cast<int>(graph_.nodes[gate].max_size);
  }

  // ---- event plumbing --------------------------------------------------

  void push_event(double t, int kind, int flight, int aux = -1) {
    events_.push({t, seq_++, kind, flight, aux});
  }

  void dispatch(const PendingEvent& ev) {
    switch (ev.kind) {
      case 0: on_inject(ev.flight); break;
      case 1: on_hold_enter(ev.flight); break;
      case 2: on_hold_exit(ev.flight); break;
      case 3: on_touchdown(ev.flight); break;
      case 4: on_node_arrive(ev.flight); break;
      case 5: on_pushback_end(ev.flight); break;
      case 6: on_takeoff(ev.flight, ev.aux); break;
      case 7: on_dep_ready(ev.flight); break;
      case 8: on_wait_check(ev.flight); break;
      default: break;
    }
  }

  // ---- speeds ----------------------------------------------------------

  bool is_air_link(const GraphLink& l) const {
    const auto fk = graph_.nodes[l.from].kind;
    const auto tk = graph_.nodes[l.to].kind;
    auto air = [](NodeKind k) {
      return k == NodeKind::AirspaceFix || k == NodeKind::HoldingStack ||
             k == NodeKind::RunwayThreshold;
    };
    return air(fk) && air(tk);
  }

  double traverse_s(const SimFlight& f, const GraphLink& l) const {
    const double limit = l.speed_limit_kn * kKnToMps;
    const double v = is_air_link(l) ? std::min(limit, f.approach_mps)
                                    : std::min(limit, f.taxi_limit_mps);
    return l.length_m / v;
  }

  // ---- arrivals --------------------------------------------------------

  int pick_arrival_runway(const SimFlight&) {
    // Least holding commitments outstanding, ties by index.
    int best = -1;
    std::size_t best_load = 0;
    for (int r = 0; r < static_cast<int>(graph_.runways.size()); ++r) {
      if (!graph_.runways[r].serves_arrivals) continue;
      const auto load = runways_[r].committed_landings.size();
      if (best < 0 || load < best_load) {
        best = r;
        best_load = load;
      }
    }
    if (best < 0) throw std::invalid_argument("no arrival runway in scenario");
    return best;
  }

  int pick_departure_runway(const SimFlight&) {
    int best = -1;
    std::size_t best_load = 0;
    for (int r = 0; r < static_cast<int>(graph_.runways.size()); ++r) {
      if (!graph_.runways[r].serves_departures) continue;
      const auto load = runways_[r].dep_queue.size();
      if (best < 0 || load < best_load) {
        best = r;
        best_load = load;
      }
    }
    if (best < 0) throw std::invalid_argument("no departure runway in scenario");
    return best;
  }

  void on_inject(int fi) {
    auto& f = flights_[fi];
    f.runway = pick_arrival_runway(f);
    const auto& rw = graph_.runways[f.runway];
    // Entry fix: the airspace fix feeding this runway's holding stack.
    int fix = -1;
    for (const auto& l : graph_.links)
      if (l.to == rw.holding && graph_.nodes[l.from].kind == NodeKind::AirspaceFix)
        fix = l.from;
    if (fix < 0) throw std::invalid_argument("runway has no airspace fix feeding holding");
    log_.push(fi, EventType::Injection, now_, graph_.nodes[fix].id);

    double enroute = 0.0;
    for (const auto& l : graph_.links)
      if (l.from == fix && l.to == rw.holding) enroute = traverse_s(f, l);
    double final_leg = 0.0;
    for (const auto& l : graph_.links)
      if (l.from == rw.holding && l.to == rw.threshold) final_leg = traverse_s(f, l);
    f.freeflow_landing_s = now_ + enroute + final_leg;
    push_event(now_ + enroute, 1, fi);
  }

  double arrival_headway_s(const SimFlight& trailing, core::WtcClass leading) const {
    const double nm = sc_.separation.arrival(leading, trailing.wtc);
    return nm * 1852.0 / trailing.approach_mps;
  }

  void on_hold_enter(int fi) {
    auto& f = flights_[fi];
    f.phase = Phase::ArrHolding;
    auto& rs = runways_[f.runway];
    const auto& rw = graph_.runways[f.runway];
    log_.push(fi, EventType::HoldEnter, now_, graph_.nodes[rw.holding].id);

    double final_leg = 0.0;
    for (const auto& l : graph_.links)
      if (l.from == rw.holding && l.to == rw.threshold) final_leg = traverse_s(f, l);

    double landing = now_ + final_leg;
    if (rs.last_commit_t > -kInf)
      landing = std::max(landing, rs.last_commit_t + arrival_headway_s(f, rs.last_commit_wtc));
    if (rw.serves_departures)
      landing = std::max(landing, rs.last_takeoff_t + sc_.runway_clear_buffer_s);
    rs.last_commit_t = landing;
    rs.last_commit_wtc = f.wtc;
    rs.committed_landings.push_back({landing, fi});
    push_event(landing - final_leg, 2, fi);
    push_event(landing, 3, fi);
  }

  void on_hold_exit(int fi) {
    auto& f = flights_[fi];
    f.phase = Phase::ArrFinal;
    const auto& rw = graph_.runways[f.runway];
    log_.push(fi, EventType::HoldExit, now_, graph_.nodes[rw.holding].id);
  }

  void on_touchdown(int fi) {
    auto& f = flights_[fi];
    auto& rs = runways_[f.runway];
    const auto& rw = graph_.runways[f.runway];
    rs.last_landing_t = now_;
    rs.last_landing_wtc = f.wtc;
    while (!rs.committed_landings.empty() && rs.committed_landings.front().second != fi)
      rs.committed_landings.pop_front();
    if (!rs.committed_landings.empty()) rs.committed_landings.pop_front();
    log_.push(fi, EventType::Touchdown, now_, graph_.nodes[rw.threshold].id);
    count_movement(now_);
    ++result_.arrivals_served;
    f.touchdown_s = now_;
    log_.flights[fi].delay.airspace = std::max(0.0, now_ - f.freeflow_landing_s) / 60.0;
    log_.flights[fi].runway = rw.name;

    assign_gate_and_path(fi);
    f.phase = Phase::ArrTaxi;
    try_enter_next_link(fi);
    pump_departures(f.runway);
  }

  void assign_gate_and_path(int fi) {
    auto& f = flights_[fi];
    const int from = graph_.runways[f.runway].threshold;
    const int gate = best_free_gate(f, from);
    if (gate >= 0) {
      reserve_gate(fi, gate);
      f.path = graph_.shortest_path(from, gate);
      f.gate_pending = false;
    } else {
      const int target = nearest_gate_any(f, from);
      f.path = graph_.shortest_path(from, target);
      if (!f.path.empty()) f.path.pop_back();  // stop short of the occupied gate
      f.gate_pending = true;
    }
    f.path_pos = 0;
  }

  int best_free_gate(const SimFlight& f, int from) const {
    int best = -1;
    double best_t = kInf;
    for (int g : graph_.gate_ids()) {
      if (gate_occupant_[g] >= 0 || !fits_gate(f, g)) continue;
      const auto path = graph_.shortest_path(from, g);
      if (path.empty()) continue;
      double t = 0.0;
      for (int li : path) t += traverse_s(f, graph_.links[li]);
      if (t < best_t) {
        best_t = t;
        best = g;
      }
    }
    return best;
  }

  int nearest_gate_any(const SimFlight& f, int from) const {
    int best = -1;
    double best_t = kInf;
    for (int g : graph_.gate_ids()) {
      if (!fits_gate(f, g)) continue;
      const auto path = graph_.shortest_path(from, g);
      if (path.empty()) continue;
      double t = 0.0;
      for (int li : path) t += traverse_s(f, graph_.links[li]);
      if (t < best_t) {
        best_t = t;
        best = g;
      }
    }
    if (best < 0) throw std::invalid_argument("no compatible gate reachable");
    return best;
  }

  void reserve_gate(int fi, int gate) {
    gate_occupant_[gate] = fi;
    flights_[fi].gate = gate;
  }

  // ---- taxi network ----------------------------------------------------

  bool link_free(int li) const {
    const auto& l = graph_.links[li];
    if (static_cast<int>(links_[li].occupants.size()) >= l.lane_count) return false;
    if (l.shared_group >= 0) {
      for (int lj = 0; lj < static_cast<int>(graph_.links.size()); ++lj) {
        if (lj == li) continue;
        if (graph_.links[lj].shared_group == l.shared_group && !links_[lj].occupants.empty())
          return false;
      }
    }
    return true;
  }

  /// Move a flight into its next path link if possible; otherwise register it
  /// as a waiter. Entering a link releases the previous one.
  void try_enter_next_link(int fi) {
    auto& f = flights_[fi];
    if (f.path_pos >= f.path.size()) {
      on_path_complete(fi);
      return;
    }
    const int li = f.path[f.path_pos];
    if (!link_free(li)) {
      if (f.waiting_link != li) {
        f.waiting_link = li;
        f.wait_since_s = now_;
        links_[li].waiters.push_back({seq_++, fi});
        push_event(now_ + sc_.gridlock_threshold_min * 60.0, 8, fi);
      }
      return;
    }
    enter_link(fi, li);
  }

  void enter_link(int fi, int li) {
    auto& f = flights_[fi];
    f.waiting_link = -1;
    f.wait_since_s = -1.0;
    release_current_link(fi);
    f.current_link = li;
    auto& ls = links_[li];
    ls.occupants.push_back(fi);
    log_.push(fi, EventType::LinkEnter, now_, link_label(li));

    const double traverse = traverse_s(f, graph_.links[li]);
    f.unimpeded_taxi_s += traverse;
    double arrive = std::max(now_ + traverse, ls.last_scheduled_exit + kFollowGapS);
    ls.last_scheduled_exit = arrive;
    ++f.path_pos;
    push_event(arrive, 4, fi);
  }

  void release_current_link(int fi) {
    auto& f = flights_[fi];
    if (f.current_link < 0) return;
    const int li = f.current_link;
    auto& ls = links_[li];
    auto it = std::find(ls.occupants.begin(), ls.occupants.end(), fi);
    if (it != ls.occupants.end()) ls.occupants.erase(it);
    f.current_link = -1;
    log_.push(fi, EventType::LinkExit, now_, link_label(li));
    if (graph_.nodes[graph_.links[li].from].kind == NodeKind::RunwayThreshold)
      log_.push(fi, EventType::RunwayExit, now_, graph_.nodes[graph_.links[li].to].id);
    // A follower that already reached the far node advances behind us.
    if (!ls.occupants.empty()) {
      const int head = ls.occupants.front();
      if (flights_[head].at_link_end) {
        flights_[head].at_link_end = false;
        push_event(now_ + kFollowGapS, 4, head);
      }
    }
    pump_link(li);
  }

  std::string link_label(int li) const {
    const auto& l = graph_.links[li];
    return graph_.nodes[l.from].id + ">" + graph_.nodes[l.to].id;
  }

  /// Wake the earliest waiter that can now enter this link or its group.
  void pump_link(int li) {
    const int group = graph_.links[li].shared_group;
    while (true) {
      int best_link = -1;
      std::uint64_t best_seq = 0;
      auto consider = [&](int lj) {
        auto& w = links_[lj].waiters;
        while (!w.empty() && flights_[w.front().second].waiting_link != lj) w.pop_front();
        if (w.empty() || !link_free(lj)) return;
        if (best_link < 0 || w.front().first < best_seq) {
          best_link = lj;
          best_seq = w.front().first;
        }
      };
      if (group < 0) {
        consider(li);
      } else {
        for (int lj = 0; lj < static_cast<int>(graph_.links.size()); ++lj)
          if (graph_.links[lj].shared_group == group) consider(lj);
      }
      if (best_link < 0) return;
      const int fi = links_[best_link].waiters.front().second;
      links_[best_link].waiters.pop_front();
      if (flights_[fi].phase == Phase::DepWaitPushback)
        begin_pushback(fi, best_link);
      else
        enter_link(fi, best_link);
    }
  }

  /// A flight may advance off a link only as its head occupant; otherwise it
  /// parks at the link end until the leader's release wakes it.
  void on_node_arrive(int fi) {
    auto& f = flights_[fi];
    if (f.current_link >= 0) {
      const auto& occ = links_[f.current_link].occupants;
      if (!occ.empty() && occ.front() != fi) {
        f.at_link_end = true;
        return;
      }
    }
    f.at_link_end = false;
    if (f.phase == Phase::ArrTaxi) {
      try_enter_next_link(fi);
    } else if (f.phase == Phase::DepTaxi || f.phase == Phase::DepPushback) {
      f.phase = Phase::DepTaxi;
      try_enter_next_link(fi);
    }
  }

  void on_path_complete(int fi) {
    auto& f = flights_[fi];
    if (f.dir == core::Direction::Arrival) {
      if (f.gate_pending) {
        const int gate = best_free_gate(f, current_node(fi));
        if (gate < 0) {
          if (!f.waiting_gate) {
            f.waiting_gate = true;
            f.gate_wait_start_s = now_;
            f.wait_since_s = now_;
            gate_waiters_.push_back(fi);
            push_event(now_ + sc_.gridlock_threshold_min * 60.0, 8, fi);
          }
          f.phase = Phase::ArrWaitGate;
          return;
        }
        resume_with_gate(fi, gate);
        return;
      }
      complete_gate_on(fi);
    } else {
      // Departure reached the runway's departure queue.
      on_dep_queue_enter(fi);
    }
  }

  int current_node(int fi) const {
    const auto& f = flights_[fi];
    if (f.current_link >= 0) return graph_.links[f.current_link].to;
    if (f.dir == core::Direction::Arrival)
      return graph_.runways[f.runway].threshold;
    return f.gate;
  }

  void resume_with_gate(int fi, int gate) {
    auto& f = flights_[fi];
    f.waiting_gate = false;
    f.gate_pending = false;
    if (f.gate_wait_start_s >= 0.0) {
      f.gate_wait_s += now_ - f.gate_wait_start_s;
      f.gate_wait_start_s = -1.0;
    }
    f.wait_since_s = -1.0;
    reserve_gate(fi, gate);
    f.path = graph_.shortest_path(current_node(fi), gate);
    f.path_pos = 0;
    f.phase = Phase::ArrTaxi;
    try_enter_next_link(fi);
  }

  static double round_delay(double minutes) { return std::round(minutes * 100.0) / 100.0; }

  void complete_gate_on(int fi) {
    auto& f = flights_[fi];
    f.phase = Phase::ArrDone;
    f.gate_on_s = now_;
    release_current_link(fi);
    log_.push(fi, EventType::GateOn, now_, graph_.nodes[f.gate].id);
    auto& lf = log_.flights[fi];
    const double taxi_span = now_ - f.touchdown_s;
    lf.delay.gate = round_delay(f.gate_wait_s / 60.0);
    lf.delay.ground =
        round_delay(std::max(0.0, taxi_span - f.unimpeded_taxi_s - f.gate_wait_s) / 60.0);
    lf.delay.airspace = round_delay(lf.delay.airspace);
    lf.finished = true;
    record_flight_delay(fi, f.touchdown_s);

    if (f.linked >= 0) {
      auto& dep = flights_[f.linked];
      dep.gate = f.gate;
      gate_occupant_[f.gate] = f.linked;  // reservation passes to the turnaround
      dep.ready_s = std::max(dep.ready_s, now_ + sc_.turnaround_min * 60.0);
      push_event(dep.ready_s, 7, f.linked);
    } else {
      free_gate_of(fi);
    }
  }

  void free_gate_of(int fi) {
    auto& f = flights_[fi];
    if (f.gate < 0) return;
    gate_occupant_[f.gate] = -1;
    const int freed = f.gate;
    f.gate = -1;
    pump_gate_waiters(freed);
  }

  void pump_gate_waiters(int gate) {
    for (auto it = gate_waiters_.begin(); it != gate_waiters_.end(); ++it) {
      auto& f = flights_[*it];
      if (!f.waiting_gate) continue;
      if (gate_occupant_[gate] < 0 && fits_gate(f, gate)) {
        const int fi = *it;
        gate_waiters_.erase(it);
        resume_with_gate(fi, gate);
        return;
      }
    }
  }

  // ---- departures ------------------------------------------------------

  void on_dep_ready(int fi) {
    auto& f = flights_[fi];
    if (f.phase != Phase::DepDormant) return;
    if (now_ < f.ready_s - 1e-9) return;  // superseded by a later ready event
    f.phase = Phase::DepWaitPushback;
    f.runway = pick_departure_runway(f);
    const int queue_node = graph_.runways[f.runway].dep_queue;
    f.path = graph_.shortest_path(f.gate, queue_node);
    if (f.path.empty())
      throw std::invalid_argument("gate cannot reach departure queue");
    f.path_pos = 0;
    f.pushback_wait_start_s = now_;
    try_start_pushback(fi);
  }

  void try_start_pushback(int fi) {
    auto& f = flights_[fi];
    const int li = f.path[0];
    if (!link_free(li)) {
      if (f.waiting_link != li) {
        f.waiting_link = li;
        f.wait_since_s = now_;
        links_[li].waiters.push_back({seq_++, fi});
        push_event(now_ + sc_.gridlock_threshold_min * 60.0, 8, fi);
      }
      return;
    }
    begin_pushback(fi, li);
  }

  void begin_pushback(int fi, int li) {
    auto& f = flights_[fi];
    f.waiting_link = -1;
    f.wait_since_s = -1.0;
    f.phase = Phase::DepPushback;
    f.pushback_start_s = now_;
    log_.push(fi, EventType::GateOff, now_, f.gate >= 0 ? graph_.nodes[f.gate].id : "");
    log_.push(fi, EventType::PushbackStart, now_, link_label(li));

    // The pushback holds the first taxiway link for its whole duration.
    f.current_link = li;
    links_[li].occupants.push_back(fi);
    log_.push(fi, EventType::LinkEnter, now_, link_label(li));
    push_event(now_ + sc_.pushback_s, 5, fi);
  }

  void on_pushback_end(int fi) {
    auto& f = flights_[fi];
    log_.push(fi, EventType::PushbackEnd, now_, link_label(f.current_link));
    // Stand frees once the aircraft is fully on the taxiway. Apron-spawned
    // departures never held a reservation.
    if (f.gate >= 0 && gate_occupant_[f.gate] == fi) {
      gate_occupant_[f.gate] = -1;
      pump_gate_waiters(f.gate);
    }
    f.gate = -1;
    const int li = f.current_link;
    auto& ls = links_[li];
    const double traverse = traverse_s(f, graph_.links[li]);
    f.unimpeded_taxi_s += traverse;
    double arrive = std::max(now_ + traverse, ls.last_scheduled_exit + kFollowGapS);
    ls.last_scheduled_exit = arrive;
    f.path_pos = 1;
    f.phase = Phase::DepTaxi;
    push_event(arrive, 4, fi);
  }

  void on_dep_queue_enter(int fi) {
    auto& f = flights_[fi];
    f.phase = Phase::DepQueued;
    f.queue_enter_s = now_;
    release_current_link(fi);
    auto& rs = runways_[f.runway];
    const auto& rw = graph_.runways[f.runway];
    log_.push(fi, EventType::DepQueueEnter, now_, graph_.nodes[rw.dep_queue].id);
    rs.dep_queue.push_back(fi);
    pump_departures(f.runway);
  }

  /// Grant the head of the departure queue a takeoff slot. On a runway that
  /// also lands traffic, a departure fits between two arrivals only if the
  /// gap covers the wake separation behind the leading arrival plus the
  /// runway-clear buffer before the trailing one.
  void pump_departures(int r) {
    auto& rs = runways_[r];
    if (rs.dep_busy || rs.dep_queue.empty()) return;
    const int fi = rs.dep_queue.front();
    const auto& f = flights_[fi];
    const auto& rw = graph_.runways[r];

    double t = now_;
    if (rs.last_takeoff_t > -kInf)
      t = std::max(t, rs.last_takeoff_t + sc_.separation.departure(rs.last_takeoff_wtc, f.wtc));
    if (rw.serves_arrivals) {
      if (rs.last_landing_t > -kInf)
        t = std::max(t, rs.last_landing_t + sc_.separation.departure(rs.last_landing_wtc, f.wtc));
      double lead_t = rs.last_landing_t;
      core::WtcClass lead_wtc = rs.last_landing_wtc;
      for (const auto& [lt, lfi] : rs.committed_landings) {
        if (t + sc_.runway_clear_buffer_s <= lt) break;  // fits before this landing
        // Wait for this landing, then respect its wake before rolling.
        lead_t = lt;
        lead_wtc = flights_[lfi].wtc;
        t = std::max(t, lead_t + sc_.separation.departure(lead_wtc, f.wtc));
      }
    }
    rs.dep_busy = true;
    push_event(t, 6, fi, r);
  }

  void on_takeoff(int fi, int r) {
    auto& f = flights_[fi];
    auto& rs = runways_[r];
    const auto& rw = graph_.runways[r];

    if (rw.serves_arrivals) {
      // A landing may have been committed meanwhile; re-check the gap.
      for (const auto& [lt, lfi] : rs.committed_landings) {
        if (now_ + sc_.runway_clear_buffer_s <= lt) break;
        if (now_ >= lt + sc_.separation.departure(flights_[lfi].wtc, f.wtc)) continue;
        rs.dep_busy = false;
        pump_departures(r);  // re-schedule after the conflicting landing
        return;
      }
      if (now_ < rs.last_landing_t + sc_.separation.departure(rs.last_landing_wtc, f.wtc) - 1e-9) {
        rs.dep_busy = false;
        pump_departures(r);
        return;
      }
    }

    rs.dep_queue.pop_front();
    rs.dep_busy = false;
    rs.last_takeoff_t = now_;
    rs.last_takeoff_wtc = f.wtc;
    f.phase = Phase::DepDone;
    log_.push(fi, EventType::Takeoff, now_, graph_.nodes[rw.threshold].id);
    count_movement(now_);
    ++result_.departures_served;

    auto& lf = log_.flights[fi];
    lf.runway = rw.name;
    lf.delay.departure_queue = round_delay((now_ - f.queue_enter_s) / 60.0);
    const double pushback_wait = f.pushback_start_s - f.pushback_wait_start_s;
    const double taxi_span = f.queue_enter_s - f.pushback_start_s;
    lf.delay.ground = round_delay(
        (pushback_wait + std::max(0.0, taxi_span - sc_.pushback_s - f.unimpeded_taxi_s)) / 60.0);
    lf.finished = true;
    record_flight_delay(fi, now_);
    pump_departures(r);
  }

  // ---- gridlock --------------------------------------------------------

  void on_wait_check(int fi) {
    const auto& f = flights_[fi];
    if (f.wait_since_s < 0.0) return;  // no longer waiting
    if (now_ - f.wait_since_s < sc_.gridlock_threshold_min * 60.0 - 1e-9) return;
    if (has_blocking_cycle(fi)) {
      result_.gridlocked = true;
      return;
    }
    push_event(now_ + sc_.gridlock_threshold_min * 60.0, 8, fi);
  }

  std::vector<int> blocked_by(int fi) const {
    const auto& f = flights_[fi];
    std::vector<int> holders;
    if (f.waiting_link >= 0) {
      const int group = graph_.links[f.waiting_link].shared_group;
      for (int lj = 0; lj < static_cast<int>(graph_.links.size()); ++lj) {
        const bool same = lj == f.waiting_link ||
                          (group >= 0 && graph_.links[lj].shared_group == group);
        if (!same) continue;
        for (int o : links_[lj].occupants) holders.push_back(o);
      }
    } else if (f.waiting_gate) {
      for (int g : graph_.gate_ids())
        if (fits_gate(f, g) && gate_occupant_[g] >= 0) holders.push_back(gate_occupant_[g]);
    }
    return holders;
  }

  bool has_blocking_cycle(int start) const {
    std::set<int> visited;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (int nxt : blocked_by(cur)) {
        if (nxt == start) return true;
        if (visited.insert(nxt).second) stack.push_back(nxt);
      }
    }
    return false;
  }

  // ---- accounting ------------------------------------------------------

  void count_movement(double t) {
    const int hour = std::max(0, static_cast<int>(t / 3600.0));
    if (hour >= static_cast<int>(hourly_abs_.size())) hourly_abs_.resize(hour + 1, 0);
    ++hourly_abs_[hour];
  }

  void record_flight_delay(int fi, double movement_t) {
    const auto& lf = log_.flights[fi];
    const int hour = std::clamp(static_cast<int>(movement_t / 3600.0), 0, 23);
    hourly_delay_sum_[hour] += lf.delay.total();
    ++hourly_delay_n_[hour];
    if (lf.direction == core::Direction::Arrival) {
      result_.arrival_totals.airspace += lf.delay.airspace;
      result_.arrival_totals.ground += lf.delay.ground;
      result_.arrival_totals.gate += lf.delay.gate;
      result_.arrival_totals.departure_queue += lf.delay.departure_queue;
    } else {
      result_.departure_totals.airspace += lf.delay.airspace;
      result_.departure_totals.ground += lf.delay.ground;
      result_.departure_totals.gate += lf.delay.gate;
      result_.departure_totals.departure_queue += lf.delay.departure_queue;
    }
  }

  void finalize() {
    int finished = 0;
    double delay_sum = 0.0;
    for (const auto& lf : log_.flights) {
      if (lf.finished) {
        ++finished;
        delay_sum += lf.delay.total();
      }
    }
    if (!result_.gridlocked && finished < static_cast<int>(log_.flights.size())) {
      // Event queue drained with flights stuck: circular blocking.
      result_.gridlocked = !log_.flights.empty();
    }
    result_.completed = !result_.gridlocked;
    result_.daily_flights_served = result_.arrivals_served + result_.departures_served;
    result_.mean_delay_min = finished > 0 ? delay_sum / finished : 0.0;
    for (int h = 0; h < 24; ++h)
      result_.hourly_mean_delay[h] =
          hourly_delay_n_[h] > 0 ? hourly_delay_sum_[h] / hourly_delay_n_[h] : 0.0;
    for (int h = 0; h < static_cast<int>(hourly_abs_.size()); ++h) {
      if (h < 24) result_.hourly_counts[h] = hourly_abs_[h];
      result_.peak_hourly_movements = std::max(result_.peak_hourly_movements, hourly_abs_[h]);
    }
    result_.hourly_movements = hourly_abs_;
  }

  const Scenario& sc_;
  AirfieldGraph graph_;
  std::mt19937_64 rng_;
  double now_{0.0};
  std::uint64_t seq_{0};
  std::int64_t day0_min_{0};

  std::vector<SimFlight> flights_;
  std::vector<LinkState> links_;
  std::vector<RunwayState> runways_;
  std::vector<int> gate_occupant_;
  std::deque<int> gate_waiters_;
  std::priority_queue<PendingEvent, std::vector<PendingEvent>, std::greater<>> events_;

  std::array<double, 24> hourly_delay_sum_{};
  std::array<int, 24> hourly_delay_n_{};
  std::vector<int> hourly_abs_;

  IterationResult result_;
  EventLog log_;
};

}  // namespace detail

/// Run every iteration of a scenario. Iterations are independent; with
/// parallel = true they run on threads and are merged by index, so the output
/// is identical either way.
inline SimulationOutput simulate(const Scenario& scenario, bool parallel = false) {
  scenario.validate();
  SimulationOutput out;
  out.results.resize(scenario.iterations);
  out.logs.resize(scenario.iterations);
  auto run_one = [&](int i) {
    detail::Iteration iter(scenario, i);
    iter.run(out.results[i], out.logs[i]);
  };
  if (parallel && scenario.iterations > 1) {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(scenario.iterations);
    threads.reserve(scenario.iterations);
    for (int i = 0; i < scenario.iterations; ++i)
      threads.emplace_back([&, i] {
        try {
          run_one(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (int i = 0; i < scenario.iterations; ++i) run_one(i);
  }
  return out;
}

}  // namespace airkit::sim
