// airkit command line: every toolkit module behind one binary.
//
// Exit codes: 0 success, 1 usage error, 2 data/validation error,
// 3 solver or simulation failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "airkit/airkit.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct RunContext {
  std::string out_dir;
  std::string format{"csv"};  // tabular outputs: csv or json
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::uint64_t seed{0};
  std::chrono::steady_clock::time_point t0{std::chrono::steady_clock::now()};
};

/// Tabular result: one set of columns, string cells, emitted as CSV or JSON
/// depending on --format.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void row(std::initializer_list<std::string> cells) { rows.emplace_back(cells); }
};

std::string cell(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}
std::string cell(int v) { return std::to_string(v); }
std::string cell(std::size_t v) { return std::to_string(v); }

std::string out_path(const RunContext& ctx, const std::string& name) {
  if (ctx.out_dir.empty() || ctx.out_dir == ".") return name;
  return ctx.out_dir + "/" + name;
}

std::ofstream open_output(RunContext& ctx, const std::string& name) {
  const std::string path = out_path(ctx, name);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  ctx.outputs.push_back(path);
  return out;
}

void write_manifest(RunContext& ctx) {
  const auto wall =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            ctx.t0);
  json m{{"tool", "airkit"},
         {"version", kVersion},
         {"command", ctx.command},
         {"inputs", ctx.inputs},
         {"outputs", ctx.outputs},
         {"seed", ctx.seed},
         {"wall_time_ms", wall.count()},
         {"generated_at", static_cast<std::int64_t>(std::time(nullptr))}};
  std::ofstream out(out_path(ctx, "manifest.json"));
  out << m.dump(2) << "\n";
}

void write_table(RunContext& ctx, const std::string& base_name, const Table& t) {
  if (ctx.format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json obj;
      for (std::size_t i = 0; i < t.columns.size() && i < r.size(); ++i)
        obj[t.columns[i]] = r[i];
      rows.push_back(std::move(obj));
    }
    auto out = open_output(ctx, base_name + ".json");
    out << rows.dump(2) << "\n";
    return;
  }
  auto out = open_output(ctx, base_name + ".csv");
  airkit::core::write_csv_row(out, t.columns);
  for (const auto& r : t.rows) airkit::core::write_csv_row(out, r);
}

std::ifstream open_input(RunContext& ctx, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  ctx.inputs.push_back(path);
  return in;
}

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- capacity

void cmd_capacity_headway(RunContext&, double sep_nm, double speed_kmh, bool exact) {
  if (exact) {
    std::cout << airkit::cap::headway_seconds_exact(sep_nm, speed_kmh) << " s\n";
    return;
  }
  const auto row = airkit::cap::headway_row(sep_nm, speed_kmh);
  std::cout << row.headway_s << " s / " << row.capacity_per_h << " per h\n";
}

void cmd_capacity_mix(RunContext&, double h, double m, double l) {
  std::cout << airkit::cap::mix_index({h, m, l}) << "\n";
}

void cmd_capacity_sequence(RunContext&, const std::string& classes, double speed_kmh) {
  std::vector<airkit::core::WtcClass> seq;
  for (char c : classes) seq.push_back(airkit::core::wtc_from_letter(c));
  const auto policy = airkit::cap::default_separation_policy();
  const auto s = airkit::cap::sequence_separation(seq, policy);
  std::cout << "total " << s.total_nm << " NM";
  if (s.avg_nm) {
    std::cout << ", avg " << *s.avg_nm << " NM";
    if (speed_kmh > 0)
      std::cout << ", capacity " << airkit::cap::capacity_per_h(*s.avg_nm, speed_kmh)
                << " per h at " << speed_kmh << " km/h";
  }
  std::cout << "\n";
}

void cmd_capacity_utilization(RunContext&, double demand, double capacity) {
  std::cout << airkit::cap::capacity_utilization(demand, capacity) << " %\n";
}

void cmd_capacity_table(RunContext& ctx, const std::vector<double>& speeds) {
  Table t;
  t.columns = {"sep_nm"};
  for (double v : speeds) {
    t.columns.push_back("headway_s_" + cell(v));
    t.columns.push_back("capacity_" + cell(v));
  }
  for (double nm : {4.0, 5.0, 6.0, 3.0, 2.5}) {
    std::vector<std::string> row{cell(nm)};
    for (double v : speeds) {
      const auto r = airkit::cap::headway_row(nm, v);
      row.push_back(cell(r.headway_s));
      row.push_back(cell(r.capacity_per_h));
    }
    t.rows.push_back(std::move(row));
  }
  write_table(ctx, "headway_table", t);
}

// ----------------------------------------------------------------- analyze

airkit::core::ScheduleParseResult load_schedule(RunContext& ctx, const std::string& path) {
  auto in = open_input(ctx, path);
  auto parsed = airkit::core::parse_schedule(in);
  if (!parsed.errors.empty())
    std::cerr << "note: " << parsed.errors.size() << " malformed rows skipped\n";
  if (parsed.flights.empty() && !parsed.errors.empty())
    throw DataError("schedule unusable: every row malformed");
  return parsed;
}

void cmd_analyze(RunContext& ctx, const std::string& schedule_path, double threshold_min,
                 double rate_eur) {
  auto parsed = load_schedule(ctx, schedule_path);
  std::vector<airkit::perf::DelaySample> samples;
  std::vector<airkit::perf::QueueSample> queue;
  std::map<int, std::pair<int, int>> hourly;  // hour -> (arr, dep)
  double total_delay = 0.0;
  for (const auto& f : parsed.flights) {
    const auto d = f.delay_min();
    if (!d) continue;
    samples.push_back({f.flight_id, static_cast<double>(*d), f.direction});
    queue.push_back({static_cast<double>(f.sched_time.value),
                     static_cast<double>(std::max(f.actual_time->value, f.sched_time.value))});
    total_delay += std::max<double>(0.0, static_cast<double>(*d));
    auto& h = hourly[airkit::core::hour_of_day(*f.actual_time)];
    if (f.direction == airkit::core::Direction::Arrival) ++h.first;
    else ++h.second;
  }
  if (samples.empty()) throw DataError("no flights with actual times");

  const auto report = airkit::perf::punctuality(samples, threshold_min);
  std::cout << "flights " << samples.size() << ", on-time " << report.pct_on_time
            << " %, mean delay " << report.mean_delay_min << " min, delay cost "
            << airkit::perf::delay_cost_eur(total_delay, rate_eur) << " EUR\n";

  {
    Table t;
    t.columns = {"delay_min", "count"};
    for (const auto& [bin, count] : report.histogram) t.row({cell(bin), cell(count)});
    write_table(ctx, "punctuality_histogram", t);
  }
  {
    airkit::perf::CumulativeDiagram diagram(queue);
    Table t;
    t.columns = {"t_min", "cum_demand", "cum_served"};
    std::vector<double> times = diagram.demand_times();
    times.insert(times.end(), diagram.service_times().begin(), diagram.service_times().end());
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    for (double time : times)
      t.row({cell(time), cell(diagram.cum_demand(time)), cell(diagram.cum_served(time))});
    write_table(ctx, "cumulative", t);
  }
  {
    std::vector<airkit::perf::HourlyPoint> points;
    for (const auto& [h, counts] : hourly)
      points.push_back({static_cast<double>(counts.first), static_cast<double>(counts.second)});
    const auto env = airkit::perf::gilbo_envelope(points);
    Table t;
    t.columns = {"arrivals_per_h", "max_departures_per_h"};
    for (const auto& p : env.frontier) t.row({cell(p.arrivals), cell(p.departures)});
    write_table(ctx, "gilbo_frontier", t);
    std::cout << "balanced capacity " << airkit::perf::balanced_capacity(env)
              << " flights/h over " << points.size() << " observed hours\n";
  }
}

// ---------------------------------------------------------------- simulate

airkit::sim::Scenario load_scenario(RunContext& ctx, const std::string& path) {
  auto in = open_input(ctx, path);
  json j;
  in >> j;
  return j.get<airkit::sim::Scenario>();
}

void write_flights_csv(std::ostream& out, const airkit::sim::EventLog& log) {
  out << "flight_id,direction,wtc,aircraft_code,runway,finished,"
         "delay_airspace_min,delay_ground_min,delay_departure_queue_min,delay_gate_min\n";
  for (const auto& f : log.flights) {
    out << f.flight_id << ','
        << (f.direction == airkit::core::Direction::Arrival ? 'A' : 'D') << ','
        << airkit::core::wtc_letter(f.wtc) << ',' << f.aircraft_code << ',' << f.runway << ','
        << (f.finished ? 1 : 0) << ',' << f.delay.airspace << ',' << f.delay.ground << ','
        << f.delay.departure_queue << ',' << f.delay.gate << "\n";
  }
}

json iteration_json(const airkit::sim::IterationResult& r) {
  return json{{"seed_used", r.seed_used},
              {"completed", r.completed},
              {"gridlocked", r.gridlocked},
              {"injected", r.injected},
              {"daily_flights_served", r.daily_flights_served},
              {"arrivals_served", r.arrivals_served},
              {"departures_served", r.departures_served},
              {"mean_delay_min", r.mean_delay_min},
              {"peak_hourly_movements", r.peak_hourly_movements},
              {"hourly_counts", r.hourly_counts},
              {"hourly_mean_delay", r.hourly_mean_delay},
              {"arrival_delay_min",
               {{"airspace", r.arrival_totals.airspace},
                {"ground", r.arrival_totals.ground},
                {"departure_queue", r.arrival_totals.departure_queue},
                {"gate", r.arrival_totals.gate}}},
              {"departure_delay_min",
               {{"airspace", r.departure_totals.airspace},
                {"ground", r.departure_totals.ground},
                {"departure_queue", r.departure_totals.departure_queue},
                {"gate", r.departure_totals.gate}}}};
}

struct ScenarioOverrides {
  double turnaround_min{-1.0};
  double gridlock_min{-1.0};
  double los_min{-1.0};

  void apply(airkit::sim::Scenario& sc) const {
    if (turnaround_min >= 0.0) sc.turnaround_min = turnaround_min;
    if (gridlock_min >= 0.0) sc.gridlock_threshold_min = gridlock_min;
    if (los_min >= 0.0) sc.los_threshold_min = los_min;
  }
};

void cmd_simulate(RunContext& ctx, const std::string& scenario_path, bool example,
                  std::uint64_t seed, int iterations, bool parallel, bool emit_logs,
                  const std::string& dump_scenario, const ScenarioOverrides& overrides) {
  airkit::sim::Scenario sc;
  if (example) {
    airkit::sim::ParallelRunwayOptions opt;
    opt.seed = seed ? seed : 1;
    sc = airkit::sim::make_parallel_runway_scenario(opt);
  } else {
    if (scenario_path.empty()) throw DataError("need --scenario or --example");
    sc = load_scenario(ctx, scenario_path);
  }
  if (seed) sc.seed = seed;
  if (iterations > 0) sc.iterations = iterations;
  overrides.apply(sc);
  ctx.seed = sc.seed;

  if (!dump_scenario.empty()) {
    std::ofstream out(dump_scenario);
    out << json(sc).dump(2) << "\n";
    ctx.outputs.push_back(dump_scenario);
    return;
  }

  const auto output = airkit::sim::simulate(sc, parallel);
  int completed = 0;
  for (const auto& r : output.results) completed += r.completed;

  json summary{{"iterations", sc.iterations},
               {"completed", completed},
               {"seed", sc.seed},
               {"results", json::array()}};
  for (const auto& r : output.results) summary["results"].push_back(iteration_json(r));
  {
    auto out = open_output(ctx, "simulation.json");
    out << summary.dump(2) << "\n";
  }
  {
    Table t;
    t.columns = {"iteration", "completed", "gridlocked", "served", "mean_delay_min",
                 "peak_hourly"};
    for (std::size_t i = 0; i < output.results.size(); ++i) {
      const auto& r = output.results[i];
      t.row({cell(i), cell(static_cast<int>(r.completed)), cell(static_cast<int>(r.gridlocked)),
             cell(r.daily_flights_served), cell(r.mean_delay_min),
             cell(r.peak_hourly_movements)});
    }
    write_table(ctx, "iterations", t);
  }
  if (emit_logs) {
    for (std::size_t i = 0; i < output.logs.size(); ++i) {
      auto ev = open_output(ctx, "events_" + std::to_string(i) + ".csv");
      airkit::sim::write_event_csv(ev, output.logs[i]);
      auto fl = open_output(ctx, "flights_" + std::to_string(i) + ".csv");
      write_flights_csv(fl, output.logs[i]);
    }
  }

  double mean_delay = 0.0;
  int served = 0;
  for (const auto& r : output.results)
    if (r.completed) {
      mean_delay += r.mean_delay_min;
      served += r.daily_flights_served;
    }
  if (completed > 0)
    std::cout << "iterations " << sc.iterations << ", completed " << completed
              << ", mean served " << served / completed << ", mean delay "
              << mean_delay / completed << " min\n";
  if (completed == 0 && sc.iterations > 0 && !sc.schedule.empty())
    throw SolverError("all iterations gridlocked");
}

void cmd_sweep(RunContext& ctx, const std::string& scenario_path, bool example,
               const std::string& steps_csv, std::uint64_t seed, int iterations, bool parallel,
               double los_min, const ScenarioOverrides& overrides) {
  airkit::sim::Scenario sc;
  if (example) {
    airkit::sim::ParallelRunwayOptions opt;
    opt.seed = seed ? seed : 1;
    sc = airkit::sim::make_parallel_runway_scenario(opt);
  } else {
    if (scenario_path.empty()) throw DataError("need --scenario or --example");
    sc = load_scenario(ctx, scenario_path);
  }
  if (seed) sc.seed = seed;
  if (iterations > 0) sc.iterations = iterations;
  overrides.apply(sc);
  ctx.seed = sc.seed;

  std::vector<double> steps;
  std::stringstream ss(steps_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) steps.push_back(std::stod(tok));
  if (steps.empty()) throw DataError("no growth steps given");

  const auto sweep = airkit::sim::growth_sweep(sc, steps, parallel);
  {
    Table t;
    t.columns = {"growth_pct", "saturated", "iterations_used", "daily_flights",
                 "avg_delay_min"};
    for (const auto& s : sweep.steps)
      t.row({cell(s.growth_pct), cell(static_cast<int>(s.saturated)), cell(s.iterations_used),
             cell(s.daily_flights), cell(s.avg_delay_min)});
    write_table(ctx, "sweep", t);
  }
  const auto points = sweep.delay_points();
  if (points.size() >= 3) {
    try {
      const auto fit = airkit::perf::fit_delay_curve(points);
      json fj{{"a", fit.a}, {"b", fit.b}, {"r2", fit.r2}};
      if (los_min > fit.a && fit.b > 0.0)
        fj["practical_capacity_daily_flights"] = airkit::perf::practical_capacity(fit, los_min);
      auto out = open_output(ctx, "delay_fit.json");
      out << fj.dump(2) << "\n";
      std::cout << "fit a=" << fit.a << " b=" << fit.b << " r2=" << fit.r2 << "\n";
    } catch (const std::exception& e) {
      std::cerr << "fit skipped: " << e.what() << "\n";
    }
  }
  bool any_usable = false;
  for (const auto& s : sweep.steps) any_usable |= !s.saturated;
  if (!any_usable) throw SolverError("every growth step gridlocked");
}

// --------------------------------------------------------------- emissions

void cmd_emissions(RunContext& ctx, const std::vector<std::string>& events_paths,
                   const std::vector<std::string>& flights_paths,
                   const std::string& fleet_path) {
  if (events_paths.size() != flights_paths.size())
    throw DataError("need one --flights per --events, in the same order");
  auto fleet_in = open_input(ctx, fleet_path);
  const auto fleet = airkit::core::parse_fleet(fleet_in);

  std::vector<airkit::emis::EmissionTotals> totals;
  for (std::size_t it = 0; it < events_paths.size(); ++it) {
    // Aircraft code and accumulated ground delay per flight.
    std::map<std::string, std::string> code_of;
    std::map<std::string, double> ground_delay_of;
    {
      auto in = open_input(ctx, flights_paths[it]);
      airkit::core::CsvReader csv(in);
      csv.require_columns({"flight_id", "aircraft_code"});
      std::vector<std::string> row;
      while (csv.next(row)) {
        if (row.size() == 1 && row[0].empty()) continue;
        const auto id = csv.field(row, "flight_id");
        code_of[id] = csv.field(row, "aircraft_code");
        double delay = 0.0;
        if (csv.has_column("delay_ground_min"))
          delay += std::stod(csv.field(row, "delay_ground_min"));
        if (csv.has_column("delay_departure_queue_min"))
          delay += std::stod(csv.field(row, "delay_departure_queue_min"));
        ground_delay_of[id] = delay;
      }
    }
    std::map<std::string, std::pair<double, double>> spans;  // id -> (pushback, takeoff)
    {
      auto in = open_input(ctx, events_paths[it]);
      airkit::core::CsvReader csv(in);
      csv.require_columns({"flight_id", "event", "t_s"});
      std::vector<std::string> row;
      while (csv.next(row)) {
        if (row.size() == 1 && row[0].empty()) continue;
        const auto& ev = csv.field(row, "event");
        if (ev == "pushback_start")
          spans[csv.field(row, "flight_id")].first = std::stod(csv.field(row, "t_s"));
        else if (ev == "takeoff")
          spans[csv.field(row, "flight_id")].second = std::stod(csv.field(row, "t_s"));
      }
    }
    std::vector<airkit::emis::TaxiSpan> taxi;
    for (const auto& [id, span] : spans) {
      if (span.second <= span.first) continue;
      auto code = code_of.find(id);
      if (code == code_of.end())
        throw DataError("flight " + id + " missing from flights table");
      taxi.push_back({code->second, span.second - span.first, ground_delay_of[id]});
    }
    totals.push_back(
        airkit::emis::aggregate_iteration(taxi, fleet, static_cast<int>(it)));
  }

  const auto ranked = airkit::emis::rank_iterations(totals);
  Table t;
  t.columns = {"rank",   "iteration", "taxi_out_min", "fuel_t", "hc_kg",      "co_kg",
               "nox_kg", "co2_t",     "ground_delay_min", "departures",
               "avg_delay_per_departure_min"};
  for (std::size_t rank = 0; rank < ranked.size(); ++rank) {
    const auto& r = ranked[rank];
    const double avg = r.departures > 0 ? r.ground_delay_min / r.departures : 0.0;
    t.row({cell(rank + 1), cell(r.iteration), cell(r.taxi_out_min), cell(r.fuel_t),
           cell(r.hc_kg), cell(r.co_kg), cell(r.nox_kg), cell(r.co2_t),
           cell(r.ground_delay_min), cell(r.departures), cell(avg)});
  }
  write_table(ctx, "emissions", t);
  for (const auto& r : ranked)
    std::cout << "iteration " << r.iteration << ": departures " << r.departures << ", fuel "
              << r.fuel_t << " t, CO2 " << r.co2_t << " t\n";
}

void cmd_eqc(RunContext&, double epndb, const std::string& daytime) {
  airkit::emis::Daytime d = airkit::emis::Daytime::Day;
  if (daytime == "evening") d = airkit::emis::Daytime::Evening;
  else if (daytime == "night") d = airkit::emis::Daytime::Night;
  else if (daytime != "day") throw DataError("daytime must be day|evening|night");
  std::cout << airkit::emis::eqc(epndb, d) << "\n";
}

// ---------------------------------------------------------------- pushback

void cmd_pushback(RunContext& ctx, const std::string& instance_path,
                  const std::string& generate, const std::string& mode_str,
                  bool add_skill1, const std::string& solver, std::uint64_t seed,
                  double time_limit_s, std::uint64_t max_iters,
                  const std::string& out_instance) {
  airkit::vrp::PushbackInstance inst;
  const auto mode = mode_str == "sets" ? airkit::vrp::SkillMode::Sets
                                       : airkit::vrp::SkillMode::Levels;
  ctx.seed = seed;
  if (!generate.empty()) {
    if (generate == "benchmark")
      inst = airkit::vrp::generate_benchmark_instance(seed, mode, add_skill1);
    else if (generate.rfind("random-", 0) == 0)
      inst = airkit::vrp::generate_random_instance(seed, std::stoi(generate.substr(7)), 3, mode);
    else
      throw DataError("unknown generator: " + generate + " (use benchmark or random-N)");
    if (!out_instance.empty()) {
      std::ofstream out(out_instance);
      out << json(inst).dump(2) << "\n";
      ctx.outputs.push_back(out_instance);
    }
  } else {
    if (instance_path.empty()) throw DataError("need --instance or --generate");
    auto in = open_input(ctx, instance_path);
    json j;
    in >> j;
    inst = j.get<airkit::vrp::PushbackInstance>();
  }

  const auto t0 = std::chrono::steady_clock::now();
  airkit::vrp::Solution sol;
  try {
    if (solver == "greedy") {
      sol = airkit::vrp::greedy_construct(inst);
    } else if (solver == "oracle") {
      auto exact = airkit::vrp::exact_oracle(inst);
      if (!exact) throw SolverError("instance infeasible");
      sol = *exact;
    } else {
      airkit::vrp::LnsParams params;
      params.seed = seed;
      params.time_limit_s = time_limit_s;
      if (max_iters) params.max_iterations = max_iters;
      sol = airkit::vrp::lns_solve(inst, params);
    }
  } catch (const airkit::vrp::InfeasibleInstance& e) {
    throw SolverError(e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto violations = airkit::vrp::check_feasible(inst, sol);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "violation: " << v.message << "\n";
    throw SolverError("solver returned an infeasible solution");
  }
  int routes_used = 0, jobs = 0;
  for (const auto& r : sol.routes) {
    if (!r.empty()) ++routes_used;
    jobs += static_cast<int>(r.size());
  }
  std::cout << "#\tRoutes\tJobs\tTime\tCosts\n";
  std::cout << "1\t" << routes_used << "\t" << jobs << "\t" << secs << "\t" << sol.total_cost
            << "\n";
  auto out = open_output(ctx, "solution.json");
  out << json(sol).dump(2) << "\n";
}

// -------------------------------------------------------------------- econ

void cmd_econ_envelope(RunContext& ctx, const std::string& panel_path,
                       const std::string& unit_str) {
  auto in = open_input(ctx, panel_path);
  airkit::core::CsvReader csv(in);
  csv.require_columns({"airport", "year", "pax", "cargo_kg", "ebit"});
  std::vector<airkit::econ::AirportYear> data;
  std::vector<std::string> row;
  while (csv.next(row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    airkit::econ::AirportYear r;
    r.airport = csv.field(row, "airport");
    r.year = std::stoi(csv.field(row, "year"));
    r.pax = std::stod(csv.field(row, "pax"));
    r.cargo_kg = std::stod(csv.field(row, "cargo_kg"));
    r.ebit = std::stod(csv.field(row, "ebit"));
    data.push_back(std::move(r));
  }
  if (data.empty()) throw DataError("empty panel");
  const auto unit = unit_str == "wlu" ? airkit::econ::OutputUnit::WLU
                                      : airkit::econ::OutputUnit::PAX;
  const auto env = airkit::econ::profitability_envelope(data, unit);
  for (const auto& w : env.warnings) std::cerr << "warning: " << w << "\n";
  {
    Table t;
    t.columns = {"airport", "year", "volume", "ebit_per_unit", "benchmark"};
    for (const auto& p : env.points)
      t.row({p.airport, cell(p.year), cell(p.volume), cell(p.ratio), cell(p.benchmark)});
    write_table(ctx, "envelope", t);
  }
  {
    const auto gains = airkit::econ::efficiency_gains(env.points);
    Table t;
    t.columns = {"airport", "year", "gain"};
    for (const auto& g : gains.per_airport) t.row({g.airport, cell(g.year), cell(g.gain)});
    write_table(ctx, "efficiency_gains", t);
    std::cout << "system efficiency gain " << gains.system_gain << "\n";
  }
  if (const auto bracket = airkit::econ::break_even_bracket(env.points))
    std::cout << "break-even between " << bracket->last_loss_volume << " and "
              << bracket->first_profit_volume << "\n";
  else
    std::cout << "no break-even crossing\n";
}

void cmd_econ_pso(RunContext& ctx, const std::string& network_path, double total_cost,
                  double target_subsidy, bool have_target, double exponent, bool closed_form,
                  bool bisect_check) {
  auto in = open_input(ctx, network_path);
  airkit::core::CsvReader csv(in);
  csv.require_columns({"origin", "destination", "revenue", "pax", "distance_km"});
  airkit::econ::PsoNetwork net;
  std::vector<std::string> row;
  while (csv.next(row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    airkit::econ::PsoRoute r;
    r.origin = csv.field(row, "origin");
    r.destination = csv.field(row, "destination");
    r.revenue = std::stod(csv.field(row, "revenue"));
    r.pax = std::stod(csv.field(row, "pax"));
    r.distance_km = std::stod(csv.field(row, "distance_km"));
    net.routes.push_back(std::move(r));
  }
  if (net.routes.empty()) throw DataError("empty network");

  std::cout << "RPK " << net.total_rpk() << ", revenue " << net.total_revenue()
            << ", break-even CRPK " << airkit::econ::pso_breakeven_cost(net) << "\n";
  if (total_cost > 0.0) {
    const double crpk = airkit::econ::pso_average_cost(net, total_cost);
    std::cout << "average CRPK " << crpk << ", residual "
              << airkit::econ::pso_residual(net, crpk) << "\n";
  }
  const double target = have_target
                            ? target_subsidy
                            : airkit::econ::pso_residual(
                                  net, total_cost > 0.0
                                           ? airkit::econ::pso_average_cost(net, total_cost)
                                           : airkit::econ::pso_breakeven_cost(net));
  double lambda = 0.0;
  if (closed_form || !bisect_check) {
    lambda = airkit::econ::pso_lambda_solve(net, target, exponent);
    std::cout << "lambda (closed form) " << lambda << "\n";
  }
  if (bisect_check) {
    const double lb = airkit::econ::pso_lambda_bisect(net, target, exponent);
    std::cout << "lambda (bisection) " << lb << "\n";
    if (closed_form) lambda = airkit::econ::pso_lambda_solve(net, target, exponent);
    if (closed_form && std::abs(lb - lambda) > 1e-6)
      throw SolverError("bisection and closed form disagree");
    lambda = lb;
  }
  const auto table = airkit::econ::subsidy_per_pax(net, [&](const airkit::econ::PsoRoute& r) {
    return airkit::econ::distance_scaled_cost(lambda, r.distance_km, exponent);
  });
  Table t;
  t.columns = {"origin",        "destination",  "unit_cost",
               "subsidy_per_rpk", "route_subsidy", "subsidy_per_pax"};
  for (const auto& s : table)
    t.row({s.origin, s.destination, cell(s.unit_cost), cell(s.subsidy_per_rpk),
           cell(s.route_subsidy), cell(s.subsidy_per_pax)});
  write_table(ctx, "subsidy_per_pax", t);
}

// ------------------------------------------------------------------ cindex

void cmd_cindex(RunContext& ctx, const std::string& schedule_path,
                const std::string& propagation_out) {
  auto parsed = load_schedule(ctx, schedule_path);
  auto nets = airkit::net::build_carrier_networks(parsed.flights);
  std::vector<double> values;
  std::vector<const airkit::net::CarrierNetwork*> usable;
  for (const auto& n : nets) {
    if (n.n_airports() < 2) continue;
    usable.push_back(&n);
    values.push_back(airkit::net::cindex(n));
  }
  if (usable.empty()) throw DataError("no carrier-month with 2+ airports");
  std::vector<airkit::net::NetworkClass> classes;
  if (values.size() >= 3) classes = airkit::net::classify(values);

  Table t;
  t.columns = {"carrier", "year", "month", "n_airports", "sum_k", "cindex", "class"};
  for (std::size_t i = 0; i < usable.size(); ++i) {
    const auto& n = *usable[i];
    t.row({n.carrier, cell(n.year), cell(static_cast<int>(n.month)), cell(n.n_airports()),
           cell(n.sum_k()), cell(values[i]),
           classes.empty() ? "n/a" : airkit::net::to_string(classes[i])});
  }
  write_table(ctx, "cindex", t);
  std::cout << "carrier-months " << usable.size() << "\n";

  if (!propagation_out.empty()) {
    const auto rotations = airkit::core::build_rotations(parsed.flights);
    const auto records = airkit::net::propagation(rotations.rotations);
    std::ofstream pout(propagation_out);
    ctx.outputs.push_back(propagation_out);
    pout << "flight_id,tail,leg_index,inbound_delay_min,own_arrival_delay_min\n";
    for (const auto& r : records)
      pout << r.flight_id << ',' << r.tail << ',' << r.leg_index << ',' << r.inbound_delay_min
           << ',' << r.own_arrival_delay_min << "\n";
    std::cout << "propagation records " << records.size() << " (tail-less excluded: "
              << rotations.excluded_tailless << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"airport capacity, simulation, emissions, routing and economics toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunContext ctx;
  const char* env_out = std::getenv("AIRKIT_OUT");
  ctx.out_dir = env_out ? env_out : ".";
  app.add_option("--out", ctx.out_dir, "output directory (default $AIRKIT_OUT or .)")
      ->capture_default_str();
  app.add_option("--format", ctx.format, "tabular output format: csv|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  // capacity
  auto* capacity = app.add_subcommand("capacity", "analytical runway/terminal capacity");
  capacity->require_subcommand(1);
  double sep_nm = 3.0, speed_kmh = 250.0;
  bool exact = false;
  auto* headway = capacity->add_subcommand("headway", "headway and capacity for a separation");
  headway->add_option("--sep-nm", sep_nm, "separation in NM")->required();
  headway->add_option("--speed-kmh", speed_kmh, "approach speed km/h")->required();
  headway->add_flag("--exact", exact, "print exact headway seconds, no table rounding");
  double mix_h = 0, mix_m = 0, mix_l = 0;
  auto* mix = capacity->add_subcommand("mix", "mix index from WTC percentage shares");
  mix->add_option("--heavy", mix_h)->required();
  mix->add_option("--medium", mix_m)->required();
  mix->add_option("--light", mix_l)->required();
  std::string seq_classes;
  double seq_speed = 0.0;
  auto* seq = capacity->add_subcommand("sequence", "sequence separation length");
  seq->add_option("--classes", seq_classes, "e.g. HLHLHL")->required();
  seq->add_option("--speed-kmh", seq_speed, "also print capacity at this speed");
  double util_demand = 0, util_capacity = 0;
  auto* util = capacity->add_subcommand("utilization", "demand over capacity");
  util->add_option("--demand", util_demand)->required();
  util->add_option("--capacity", util_capacity)->required();
  std::vector<double> table_speeds{250.0, 300.0};
  auto* table = capacity->add_subcommand("table", "headway table for the default minima");
  table->add_option("--speeds", table_speeds, "speeds in km/h");

  // analyze
  std::string an_schedule;
  double an_threshold = 15.0, an_rate = 42.0;
  auto* analyze = app.add_subcommand("analyze", "punctuality, cumulative diagram, envelope");
  analyze->add_option("--schedule", an_schedule, "schedule CSV")->required();
  analyze->add_option("--threshold-min", an_threshold, "on-time threshold")
      ->capture_default_str();
  analyze->add_option("--rate-eur-per-min", an_rate, "delay cost rate")->capture_default_str();

  // simulate
  std::string sim_scenario, sim_dump;
  bool sim_example = false, sim_parallel = false, sim_logs = false;
  std::uint64_t sim_seed = 0;
  int sim_iterations = 0;
  auto* simulate = app.add_subcommand("simulate", "seeded discrete-event airside simulation");
  simulate->add_option("--scenario", sim_scenario, "scenario JSON");
  simulate->add_flag("--example", sim_example, "use the bundled two-runway scenario");
  simulate->add_option("--seed", sim_seed, "override scenario seed");
  simulate->add_option("--iterations", sim_iterations, "override iteration count");
  simulate->add_flag("--parallel", sim_parallel, "run iterations on threads");
  simulate->add_flag("--emit-logs", sim_logs, "write per-iteration event/flight CSVs");
  simulate->add_option("--dump-scenario", sim_dump, "write the scenario JSON and exit");
  ScenarioOverrides sim_over;
  simulate->add_option("--turnaround-min", sim_over.turnaround_min,
                       "override minimum turnaround (default 15)");
  simulate->add_option("--gridlock-min", sim_over.gridlock_min,
                       "override gridlock wait threshold (default 60)");
  simulate->add_option("--los-min", sim_over.los_min, "override LOS threshold (default 5)");

  // sweep
  std::string sw_scenario, sw_steps = "0,20,40,60,80,100";
  bool sw_example = false, sw_parallel = false;
  std::uint64_t sw_seed = 0;
  int sw_iterations = 0;
  double sw_los = 5.0;
  auto* sweep = app.add_subcommand("sweep", "growth sweep feeding the delay-curve fit");
  sweep->add_option("--scenario", sw_scenario, "scenario JSON");
  sweep->add_flag("--example", sw_example, "use the bundled two-runway scenario");
  sweep->add_option("--steps", sw_steps, "comma-separated growth percents")
      ->capture_default_str();
  sweep->add_option("--seed", sw_seed, "override scenario seed");
  sweep->add_option("--iterations", sw_iterations, "override iteration count");
  sweep->add_flag("--parallel", sw_parallel, "run iterations on threads");
  sweep->add_option("--los-min", sw_los, "LOS threshold for practical capacity")
      ->capture_default_str();
  ScenarioOverrides sw_over;
  sweep->add_option("--turnaround-min", sw_over.turnaround_min,
                    "override minimum turnaround (default 15)");
  sweep->add_option("--gridlock-min", sw_over.gridlock_min,
                    "override gridlock wait threshold (default 60)");

  // emissions
  std::vector<std::string> em_events, em_flights;
  std::string em_fleet, em_daytime = "day";
  double em_epndb = -1.0;
  auto* emissions = app.add_subcommand("emissions", "taxi-out fuel/emissions and noise quota");
  emissions->add_option("--events", em_events, "event CSVs from simulate --emit-logs");
  emissions->add_option("--flights", em_flights, "flight CSVs, one per --events");
  emissions->add_option("--fleet", em_fleet, "aircraft-type factor CSV");
  emissions->add_option("--eqc-epndb", em_epndb, "print EQC units for this EPNdB instead");
  emissions->add_option("--daytime", em_daytime, "day|evening|night")->capture_default_str();

  // pushback
  std::string pb_instance, pb_generate, pb_mode = "levels", pb_solver = "lns", pb_out_instance;
  bool pb_add_skill1 = false;
  std::uint64_t pb_seed = 1, pb_iters = 0;
  double pb_limit = 2.0;
  auto* pushback = app.add_subcommand("pushback", "skill VRP for pushback trucks");
  pushback->add_option("--instance", pb_instance, "instance JSON");
  pushback->add_option("--generate", pb_generate,
                       "generate instead: benchmark or random-N (N nodes)");
  pushback->add_option("--mode", pb_mode, "levels|sets")->capture_default_str();
  pushback->add_flag("--add-skill1-vehicle", pb_add_skill1,
                     "repair the sets-mode benchmark infeasibility");
  pushback->add_option("--solver", pb_solver, "lns|greedy|oracle")->capture_default_str();
  pushback->add_option("--seed", pb_seed)->capture_default_str();
  pushback->add_option("--time-limit-s", pb_limit)->capture_default_str();
  pushback->add_option("--max-iters", pb_iters, "cap LNS iterations (fully deterministic)");
  pushback->add_option("--write-instance", pb_out_instance, "save the generated instance");

  // econ-envelope
  std::string ee_panel, ee_unit = "pax";
  auto* econ_env = app.add_subcommand("econ-envelope", "profitability envelope and break-even");
  econ_env->add_option("--panel", ee_panel, "airport,year,pax,cargo_kg,ebit CSV")->required();
  econ_env->add_option("--unit", ee_unit, "pax|wlu")->capture_default_str();

  // econ-pso
  std::string ep_network;
  double ep_cost = 0.0, ep_target = 0.0, ep_exponent = 0.36;
  bool ep_closed = false, ep_bisect = false;
  auto* econ_pso = app.add_subcommand("econ-pso", "PSO subsidy calculus");
  econ_pso->add_option("--network", ep_network, "origin,destination,revenue,pax,distance_km CSV")
      ->required();
  econ_pso->add_option("--total-cost", ep_cost, "network operating cost");
  auto* target_opt =
      econ_pso->add_option("--target-subsidy", ep_target, "solve lambda for this residual");
  econ_pso->add_option("--exponent", ep_exponent, "distance exponent")->capture_default_str();
  econ_pso->add_flag("--closed-form", ep_closed, "print the closed-form lambda");
  econ_pso->add_flag("--bisect-check", ep_bisect, "cross-check lambda by bisection");

  // cindex
  std::string cx_schedule, cx_propagation;
  auto* cindex = app.add_subcommand("cindex", "carrier connectivity and delay propagation");
  cindex->add_option("--schedule", cx_schedule, "schedule CSV")->required();
  cindex->add_option("--propagation", cx_propagation, "also write propagation CSV here");

  // Let --out (and anything else on the root) appear after a subcommand.
  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 covers --help/--version
  }

  for (const auto* sub : app.get_subcommands()) ctx.command += sub->get_name() + " ";

  try {
    if (capacity->parsed()) {
      if (headway->parsed()) cmd_capacity_headway(ctx, sep_nm, speed_kmh, exact);
      else if (mix->parsed()) cmd_capacity_mix(ctx, mix_h, mix_m, mix_l);
      else if (seq->parsed()) cmd_capacity_sequence(ctx, seq_classes, seq_speed);
      else if (util->parsed()) cmd_capacity_utilization(ctx, util_demand, util_capacity);
      else if (table->parsed()) cmd_capacity_table(ctx, table_speeds);
    } else if (analyze->parsed()) {
      cmd_analyze(ctx, an_schedule, an_threshold, an_rate);
    } else if (simulate->parsed()) {
      cmd_simulate(ctx, sim_scenario, sim_example, sim_seed, sim_iterations, sim_parallel,
                   sim_logs, sim_dump, sim_over);
    } else if (sweep->parsed()) {
      cmd_sweep(ctx, sw_scenario, sw_example, sw_steps, sw_seed, sw_iterations, sw_parallel,
                sw_los, sw_over);
    } else if (emissions->parsed()) {
      if (em_epndb >= 0.0) cmd_eqc(ctx, em_epndb, em_daytime);
      else if (em_events.empty() || em_flights.empty() || em_fleet.empty())
        throw DataError("need --events, --flights and --fleet (or --eqc-epndb)");
      else cmd_emissions(ctx, em_events, em_flights, em_fleet);
    } else if (pushback->parsed()) {
      cmd_pushback(ctx, pb_instance, pb_generate, pb_mode, pb_add_skill1, pb_solver, pb_seed,
                   pb_limit, pb_iters, pb_out_instance);
    } else if (econ_env->parsed()) {
      cmd_econ_envelope(ctx, ee_panel, ee_unit);
    } else if (econ_pso->parsed()) {
      cmd_econ_pso(ctx, ep_network, ep_cost, ep_target, target_opt->count() > 0, ep_exponent,
                   ep_closed, ep_bisect);
    } else if (cindex->parsed()) {
      cmd_cindex(ctx, cx_schedule, cx_propagation);
    }
    write_manifest(ctx);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
