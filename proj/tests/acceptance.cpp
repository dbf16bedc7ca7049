// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "airkit/airkit.hpp"

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

bool within(double value, double target, double tol) {
  return std::abs(value - target) <= tol;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// ------------------------------------------------------------------ 1-4

void check_headway_table() {
  using namespace airkit::cap;
  struct Row {
    double nm, speed;
    int headway, capacity;
  };
  const std::vector<Row> rows{
      {5.0, 250, 134, 27}, {5.0, 300, 112, 32}, {4.0, 300, 89, 40},  {6.0, 250, 160, 23},
      {6.0, 300, 133, 27}, {3.0, 250, 81, 44},  {3.0, 300, 67, 54},  {2.5, 250, 66, 55},
      {2.5, 300, 55, 65},
  };
  bool ok = true;
  for (const auto& r : rows) {
    const auto got = headway_row(r.nm, r.speed);
    ok = ok && got.headway_s == r.headway && got.capacity_per_h == r.capacity;
  }
  ok = ok && table_capacity_per_h(4.0, 250) == 34;

  const auto t0 = std::chrono::steady_clock::now();
  int sink = 0;
  const int reps = 10000;
  for (int i = 0; i < reps; ++i) sink += headway_row(5.0, 250).headway_s;
  if (sink == 0) std::printf("unreachable\n");
  const double per_call_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() /
      reps;
  ok = ok && per_call_ms < 1.0;
  criterion(1, "headway table rows exact", ok,
            fmt("134s/27ph at 5NM/250, 67s/54ph at 3NM/300, 66-55s/55-65ph at 2.5NM; %.4f "
                "ms/call",
                per_call_ms));
}

void check_mix_index() {
  using airkit::cap::mix_index;
  const bool ok = mix_index({2, 96, 2}) == 102.0 && mix_index({5, 95, 0}) == 110.0 &&
                  mix_index({15, 80, 5}) == 125.0 && mix_index({5, 84, 11}) == 99.0 &&
                  mix_index({20, 65, 17}) == 125.0 && mix_index({2, 84, 14}) == 90.0;
  criterion(2, "six scenario mix-index values exact", ok, "102 110 125 99 125 90");
}

void check_sequence_separation() {
  using namespace airkit::cap;
  using C = airkit::core::WtcClass;
  const auto policy = default_separation_policy();
  const std::vector<C> alt{C::Heavy, C::Light, C::Heavy, C::Light, C::Heavy, C::Light};
  const std::vector<C> bun{C::Light, C::Light, C::Light, C::Heavy, C::Heavy, C::Heavy};
  const auto s1 = sequence_separation(alt, policy);
  const auto s2 = sequence_separation(bun, policy);
  criterion(3, "worked sequence lengths exact", s1.total_nm == 24.0 && s2.total_nm == 17.0,
            fmt("HLHLHL=%.0f NM, LLLHHH=%.0f NM", s1.total_nm, s2.total_nm));
}

void check_scenario_capacities() {
  using namespace airkit::cap;
  const bool ok = capacity_per_h(3.08, 300) == 53 && capacity_per_h(3.08, 275) == 48 &&
                  capacity_per_h(3.08, 250) == 44 && capacity_per_h(3.83, 250) == 35 &&
                  capacity_per_h(3.83, 300) == 42;
  criterion(4, "scenario and benchmark capacities exact", ok,
            "3.08NM -> 53/48/44; 3.83NM -> 35/42");
}

// ------------------------------------------------------------------ 5-6

void check_delay_costs() {
  using airkit::perf::delay_cost_eur;
  const bool ok = delay_cost_eur(5955.0) == 250110.0 && delay_cost_eur(887.0) == 37254.0;
  criterion(5, "delay cost arithmetic exact", ok, "5955min -> 250110 EUR; 887min -> 37254 EUR");
}

void check_los_inversion() {
  using airkit::perf::practical_capacity;
  const double a = practical_capacity({0.0746, 0.0035, 1.0}, 5.0);
  const double b = practical_capacity({0.1137, 0.0028, 1.0}, 5.0);
  criterion(6, "delay-curve inversion at 5 min LOS", within(a, 1202.0, 2.0) && within(b, 1351.0, 2.0),
            fmt("%.1f and %.1f daily flights", a, b));
}

// ------------------------------------------------------------------ 7

void check_emission_factors() {
  using namespace airkit::emis;
  airkit::core::AircraftType t;
  t.code = "737";
  t.engines = 2;
  t.fuel_flow_idle_kg_per_s = 0.132;
  t.ei_hc_g_per_kg = 3.12;
  t.ei_co_g_per_kg = 14.1;
  t.ei_nox_g_per_kg = 2.9;
  const auto e = flight_emissions(600.0, t);
  const bool hand = within(e.fuel_kg, 158.4, 1e-9) && within(e.hc_g, 494.2, 0.1) &&
                    within(e.co_g, 2233.4, 0.1) && within(e.nox_g, 459.4, 0.1) &&
                    within(e.co2_kg, 500.07, 0.01);
  const bool rows = within(40.12 * kCo2PerFuelKg, 126.66, 0.01) &&
                    within(42.01 * kCo2PerFuelKg, 132.63, 0.01);
  criterion(7, "CO2 factor and hand-computed taxi emissions", hand && rows,
            fmt("40.12t -> %.2ft CO2; 737/600s fuel %.1fkg", 40.12 * kCo2PerFuelKg, e.fuel_kg));
}

// ------------------------------------------------------------------ 8

void check_pso() {
  using namespace airkit::econ;
  PsoNetwork net;
  PsoRoute agg;
  agg.origin = "NET";
  agg.destination = "AGG";
  agg.pax = 133'598.0;
  agg.distance_km = 19'412'681.0 / 133'598.0;
  agg.revenue = 64'838'000.0;
  net.routes.push_back(agg);

  const double crpk = pso_average_cost(net, 264'329'000.0);
  const double breakeven = pso_breakeven_cost(net);
  const double residual = pso_residual(net, 4.02);

  PsoNetwork shuttle;
  shuttle.routes.push_back({"VRY", "BOO", 85.0, 6.7 * 9063 * 85.0, 9063.0});
  const double lambda = pso_lambda_solve(shuttle, -51.3 * shuttle.total_rpk());
  const auto table = subsidy_per_pax(shuttle, [&](const PsoRoute& r) {
    return distance_scaled_cost(lambda, r.distance_km);
  });
  const double per_pax = std::abs(table[0].subsidy_per_pax);

  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> km(40, 900), fare(300, 900), pax(500, 20000);
  bool agree = true;
  for (int trial = 0; trial < 10; ++trial) {
    PsoNetwork random;
    for (int i = 0; i < 10; ++i) {
      const double p = pax(rng);
      random.routes.push_back({"O", "D", km(rng), fare(rng) * p, p});
    }
    const double target = -0.5 * random.total_revenue() * (trial + 1);
    const double closed = pso_lambda_solve(random, target);
    const double bisect = pso_lambda_bisect(random, target);
    agree = agree && std::abs(closed - bisect) <= 1e-9 * std::max(1.0, std::abs(closed));
  }

  const bool ok = within(crpk, 13.62, 0.01) && within(breakeven, 3.34, 0.01) &&
                  std::abs(residual - (-13.2e6)) <= 0.005 * 13.2e6 &&
                  std::abs(per_pax - 4341.0) <= 0.015 * 4341.0 && agree;
  criterion(8, "PSO unit-cost calculus", ok,
            fmt("CRPK %.2f, break-even %.2f, residual %.1fM, shuttle %.0f/pax, lambda dual-run",
                crpk, breakeven, residual / 1e6, per_pax));
}

// ------------------------------------------------------------------ 9-10

void check_growth() {
  using airkit::econ::compound_growth;
  using airkit::econ::growth_multiplier;
  const double k = growth_multiplier(0.05, 17);
  const long flights = std::lround(compound_growth(127.0, 0.05, 17));
  criterion(9, "compound growth forecast", within(k, 2.29, 0.005) && flights == 291,
            fmt("k=%.4f, 127 flights -> %ld", k, flights));
}

void check_haversine() {
  const airkit::core::Airport vry{"VRY", "", 67.666664, 12.683333};
  const airkit::core::Airport boo{"BOO", "ENBO", 67.27262, 14.367839};
  const double km = airkit::core::great_circle_km(vry, boo);
  criterion(10, "island shuttle distance", within(km, 85.0, 2.0), fmt("%.2f km", km));
}

// ------------------------------------------------------------------ 11

void check_cindex() {
  using namespace airkit::net;
  bool ok = true;
  for (int n = 2; n <= 20; ++n) {
    CarrierNetwork net;
    for (int i = 0; i < n; ++i) net.airports.insert("A" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) net.dests["A" + std::to_string(i)].insert("A" + std::to_string(j));
    ok = ok && cindex(net) == 100.0;
  }
  auto star = [](int n) {
    CarrierNetwork net;
    net.airports.insert("HUB");
    for (int i = 1; i < n; ++i) {
      net.airports.insert("S" + std::to_string(i));
      net.dests["HUB"].insert("S" + std::to_string(i));
      net.dests["S" + std::to_string(i)].insert("HUB");
    }
    return net;
  };
  ok = ok && cindex(star(10)) == 20.0;
  // Monotonicity: new route increases, extra spoke decreases.
  auto grown = star(10);
  grown.dests["S1"].insert("S2");
  ok = ok && cindex(grown) > 20.0;
  double prev = 1e9;
  for (int n = 3; n <= 30; ++n) {
    const double v = cindex(star(n));
    ok = ok && v < prev && within(v, 200.0 / n, 1e-12);
    prev = v;
  }
  criterion(11, "connectivity index", ok, "complete=100 for N=2..20, star10=20.0, monotone");
}

// ------------------------------------------------------------------ 12

void check_envelope() {
  using namespace airkit::econ;
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> size(1, 10'000);
  std::uniform_real_distribution<double> pax(1.0, 5e7);
  std::uniform_real_distribution<double> ratio(-80.0, 150.0);
  bool oracle_ok = true;
  for (int panel = 0; panel < 1000 && oracle_ok; ++panel) {
    const int n = size(rng);
    std::vector<AirportYear> data;
    data.reserve(n);
    for (int i = 0; i < n; ++i) {
      const double p = pax(rng);
      data.push_back({"A", 2010, p, 0.0, ratio(rng) * p});
    }
    const auto env = profitability_envelope(data);
    double running = env.points.front().ratio;
    for (const auto& pt : env.points) {
      running = std::max(running, pt.ratio);
      if (pt.benchmark != running) {
        oracle_ok = false;
        break;
      }
    }
  }

  std::vector<AirportYear> panel{{"TRE", 2010, 80'000, 0, -40.0 * 80'000},
                                 {"FDH", 2010, 590'000, 0, -23.0 * 590'000},
                                 {"EXT", 2010, 737'000, 0, 12.0 * 737'000},
                                 {"LCY", 2010, 2'800'000, 0, 99.0 * 2'800'000}};
  const auto env = profitability_envelope(panel);
  const auto bracket = break_even_bracket(env.points);
  const bool bracket_ok = bracket && bracket->last_loss_volume == 590'000.0 &&
                          bracket->first_profit_volume == 737'000.0;
  criterion(12, "profitability envelope", oracle_ok && bracket_ok,
            "prefix-max oracle on 1000 panels; bracket (590k, 737k)");
}

// ------------------------------------------------------------------ 13

void check_simulator() {
  using namespace airkit::sim;
  const auto t_start = std::chrono::steady_clock::now();

  ParallelRunwayOptions opt;
  opt.iterations = 10;
  opt.approach_speed_kmh = 250.0;  // within the swept 250-300 km/h band
  opt.seed = 2017;
  const auto scenario = make_parallel_runway_scenario(opt);

  // (a) determinism
  Scenario once = scenario;
  once.iterations = 2;
  const auto run1 = simulate(once);
  const auto run2 = simulate(once);
  const auto run3 = simulate(once, true);
  bool deterministic = true;
  for (int i = 0; i < 2; ++i)
    deterministic = deterministic && digest(run1.logs[i]) == digest(run2.logs[i]) &&
                    digest(run1.logs[i]) == digest(run3.logs[i]);
  criterion(13, "sim determinism (a)", deterministic, "identical digests across 3 runs");

  // (b) separation audit over 10 iterations
  Scenario audit_run = scenario;
  audit_run.clone_factors = scale_clone_factors(scenario.clone_factors, 60.0);
  const auto audited = simulate(audit_run, true);
  std::size_t violations = 0;
  for (const auto& log : audited.logs)
    violations += audit_separation(log, scenario.separation).size();
  criterion(13, "separation audit (b)", violations == 0,
            fmt("%zu violations over %d iterations", violations, audit_run.iterations));

  // (c) growth sweep: non-decreasing mean delay, exponential fit r2 >= 0.9
  Scenario sweep_run = scenario;
  const std::vector<double> steps{0, 25, 50, 75, 100, 125};
  const auto sweep = growth_sweep(sweep_run, steps, true);
  bool monotone = true;
  for (std::size_t i = 1; i < sweep.steps.size(); ++i)
    monotone = monotone &&
               sweep.steps[i].avg_delay_min >= sweep.steps[i - 1].avg_delay_min - 0.5;
  double r2 = 0.0;
  bool fit_ok = false;
  const auto points = sweep.delay_points();
  if (points.size() >= 5) {
    const auto fit = airkit::perf::fit_delay_curve(points);
    r2 = fit.r2;
    fit_ok = fit.r2 >= 0.9 && fit.b > 0.0;
  }
  criterion(13, "growth sweep shape (c)", monotone && fit_ok,
            fmt("%zu steps, delays %.2f..%.2f min, r2=%.3f", sweep.steps.size(),
                sweep.steps.front().avg_delay_min, sweep.steps.back().avg_delay_min, r2));

  // (d) saturated two-runway throughput inside the published bracket: demand
  // at 60 arrivals/h against a ~44/h arrival ceiling, stable rate held for
  // four consecutive hours.
  Scenario saturated = scenario;
  saturated.clone_factors = scale_clone_factors(scenario.clone_factors, 100.0);
  const auto heavy = simulate(saturated, true);
  double sustained = 0.0;
  int used = 0;
  for (const auto& r : heavy.results) {
    if (!r.completed) continue;
    sustained += r.sustained_hourly_throughput(4);
    ++used;
  }
  sustained = used > 0 ? sustained / used : 0.0;
  criterion(13, "ultimate throughput bracket (d)", sustained >= 76.0 && sustained <= 90.0,
            fmt("%.1f movements/h sustained over 4h, target [76, 90]", sustained));

  // (e) Little's law over the holding stack's saturated busy period: the
  // stack is empty at both window ends, so L, lambda and W are averaged over
  // a self-contained stationary window.
  ParallelRunwayOptions lopt;
  lopt.gates = 40;
  lopt.arrivals_per_hour = 50;
  lopt.first_hour = 7;
  lopt.last_hour = 14;
  lopt.seed = 4;
  auto little_sc = make_parallel_runway_scenario(lopt);
  little_sc.clone_factors.fill(0.0);
  std::vector<airkit::core::Flight> arrivals;
  for (const auto& f : little_sc.schedule)
    if (f.direction == airkit::core::Direction::Arrival) arrivals.push_back(f);
  little_sc.schedule = std::move(arrivals);
  const auto little_out = simulate(little_sc);
  double t_end = 0.0;
  for (const auto& e : little_out.logs[0].events) t_end = std::max(t_end, e.t_s);
  const auto m = measure_holding_littles(little_out.logs[0], 0.0, t_end + 1.0);
  const double predicted = m.arrival_rate * m.mean_wait_min;
  const double rel = std::abs(m.mean_queue_length - predicted) / predicted;
  criterion(13, "littles law on stationary window (e)", rel <= 0.05,
            fmt("L=%.2f vs lambda*W=%.2f (%.2f%%)", m.mean_queue_length, predicted, rel * 100));

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  criterion(13, "sweep wall time (<5 min)", wall < 300.0, fmt("%.1f s", wall));
}

// ------------------------------------------------------------------ 14

void check_vrp() {
  using namespace airkit::vrp;
  int optimal = 0, feasible = 0, not_worse = 0;
  double worst_seconds = 0.0;
  const int trials = 50;
  for (int trial = 0; trial < trials; ++trial) {
    const auto inst = generate_random_instance(9000 + trial, 7, 3);
    const auto t0 = std::chrono::steady_clock::now();
    LnsParams params;
    params.seed = trial;
    params.max_iterations = 800;
    params.time_limit_s = 2.0;
    params.destroy_fraction = 0.5;  // tiny instances need a wide neighborhood
    const auto sol = lns_solve(inst, params);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst_seconds = std::max(worst_seconds, secs);

    if (check_feasible(inst, sol).empty()) ++feasible;
    const auto greedy = greedy_construct(inst);
    if (sol.total_cost <= greedy.total_cost + 1e-9) ++not_worse;
    const auto best = exact_oracle(inst);
    if (best && sol.total_cost <= best->total_cost + 1e-6) ++optimal;
  }
  criterion(14, "LNS vs oracle on 50 tiny instances",
            optimal >= 45 && feasible == trials && not_worse == trials && worst_seconds < 2.0,
            fmt("optimal %d/50, feasible %d/50, <=greedy %d/50, worst %.2fs", optimal, feasible,
                not_worse, worst_seconds));

  bool shaped_ok = true;
  double worst_shaped = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto inst = generate_benchmark_instance(seed, SkillMode::Levels);
    const auto t0 = std::chrono::steady_clock::now();
    LnsParams params;
    params.seed = seed;
    params.time_limit_s = 1.0;
    params.max_iterations = 2000;
    const auto sol = lns_solve(inst, params);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst_shaped = std::max(worst_shaped, secs);
    int jobs = 0;
    for (const auto& r : sol.routes) jobs += static_cast<int>(r.size());
    shaped_ok = shaped_ok && check_feasible(inst, sol).empty() && jobs == 17 && secs < 3.0;
  }
  criterion(14, "17-gate 6-vehicle instances feasible in time", shaped_ok,
            fmt("5 seeds, 17 jobs each, worst %.2fs (<3s)", worst_shaped));
}

// ------------------------------------------------------------------ 15

void check_eqc() {
  using namespace airkit::emis;
  bool ok = eqc(84.0, Daytime::Day) == 0.25;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> level(60.0, 110.0);
  for (int i = 0; i < 500; ++i) {
    const double x = level(rng);
    const double lhs = eqc(x + 10.0, Daytime::Day);
    const double rhs = 10.0 * eqc(x, Daytime::Day);
    ok = ok && std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
  }
  criterion(15, "noise quota normalization and decade law", ok,
            "eqc(84,day)=0.25 exact; eqc(x+10)=10*eqc(x) to 1e-12");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  check_headway_table();
  check_mix_index();
  check_sequence_separation();
  check_scenario_capacities();
  check_delay_costs();
  check_los_inversion();
  check_emission_factors();
  check_pso();
  check_growth();
  check_haversine();
  check_cindex();
  check_envelope();
  check_simulator();
  check_vrp();
  check_eqc();
  if (g_failures == 0) std::printf("all criteria passed\n");
  else std::printf("%d criterion checks failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
