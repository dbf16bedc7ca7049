#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "airkit/core/types.hpp"
#include "airkit/econ/envelope.hpp"
#include "airkit/econ/growth.hpp"
#include "airkit/econ/pso.hpp"

using namespace airkit::econ;

namespace {

PsoNetwork finnmark_like() {
  // Aggregate figures of the published network collapsed onto one route:
  // the unit-cost identities depend only on the totals.
  PsoNetwork net;
  PsoRoute r;
  r.origin = "NET";
  r.destination = "AGG";
  r.pax = 133'598.0;
  r.distance_km = 19'412'681.0 / 133'598.0;  // reproduces the published RPK
  r.revenue = 64'838'000.0;
  net.routes.push_back(r);
  net.network_subsidy = -199'491'000.0;
  return net;
}

}  // namespace

TEST_CASE("profitability envelope is the prefix maximum over sorted volume") {
  SECTION("worked four-point panel") {
    std::vector<AirportYear> data{{"A", 2010, 10'000, 0, -50'000},
                                  {"B", 2010, 20'000, 0, -40'000},
                                  {"C", 2010, 30'000, 0, -120'000},
                                  {"D", 2010, 40'000, 0, 40'000}};
    const auto env = profitability_envelope(data);
    REQUIRE(env.points.size() == 4);
    CHECK(env.points[0].benchmark == -5.0);
    CHECK(env.points[1].benchmark == -2.0);
    CHECK(env.points[2].benchmark == -2.0);
    CHECK(env.points[3].benchmark == 1.0);
  }
  SECTION("single point is its own benchmark") {
    const auto env = profitability_envelope({{"A", 2010, 5'000, 0, 2'500}});
    REQUIRE(env.points.size() == 1);
    CHECK(env.points[0].benchmark == 0.5);
  }
  SECTION("all-equal ratios give a constant benchmark") {
    std::vector<AirportYear> data;
    for (int i = 1; i <= 5; ++i) data.push_back({"X", 2000 + i, 1000.0 * i, 0, 2000.0 * i});
    const auto env = profitability_envelope(data);
    for (const auto& p : env.points) CHECK(p.benchmark == 2.0);
  }
  SECTION("zero-volume records are excluded with a warning") {
    const auto env = profitability_envelope({{"Z", 2010, 0, 0, -1}, {"A", 2010, 10, 0, 5}});
    CHECK(env.points.size() == 1);
    REQUIRE(env.warnings.size() == 1);
  }
  SECTION("matches a brute-force oracle on random panels") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> pax(1.0, 1e6);
    std::uniform_real_distribution<double> ratio(-60.0, 120.0);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<AirportYear> data;
      const int n = 1 + trial * 7;
      for (int i = 0; i < n; ++i) {
        const double p = pax(rng);
        data.push_back({"A" + std::to_string(i), 2010, p, 0, ratio(rng) * p});
      }
      const auto env = profitability_envelope(data);
      double running = env.points.front().ratio;
      for (const auto& p : env.points) {
        running = std::max(running, p.ratio);
        CHECK(p.benchmark == running);
        CHECK(p.benchmark >= p.ratio);
      }
    }
  }
}

TEST_CASE("break-even bracket finds the first sign change") {
  SECTION("published 2010-style bracket") {
    std::vector<AirportYear> data{{"TRE", 2010, 80'000, 0, -80'000 * 40.0},
                                  {"FDH", 2010, 590'000, 0, -23.0 * 590'000},
                                  {"EXT", 2010, 737'000, 0, 12.0 * 737'000},
                                  {"LCY", 2010, 2'800'000, 0, 99.0 * 2'800'000}};
    const auto env = profitability_envelope(data);
    const auto bracket = break_even_bracket(env.points);
    REQUIRE(bracket.has_value());
    CHECK(bracket->last_loss_volume == 590'000.0);
    CHECK(bracket->first_profit_volume == 737'000.0);
  }
  SECTION("no crossing when all losses") {
    const auto env = profitability_envelope(
        {{"A", 2010, 100, 0, -10}, {"B", 2010, 200, 0, -10}});
    CHECK_FALSE(break_even_bracket(env.points).has_value());
  }
  SECTION("zero benchmark counts as the profitable side") {
    const auto env =
        profitability_envelope({{"A", 2010, 100, 0, -10}, {"B", 2010, 200, 0, 0}});
    const auto bracket = break_even_bracket(env.points);
    REQUIRE(bracket.has_value());
    CHECK(bracket->first_profit_volume == 200.0);
  }
}

TEST_CASE("efficiency gains against the envelope") {
  std::vector<AirportYear> data{{"GOOD", 2010, 1'000'000, 0, -2.0 * 1'000'000},
                                {"BAD", 2010, 1'000'001, 0, -5.0 * 1'000'001}};
  const auto env = profitability_envelope(data);
  const auto gains = efficiency_gains(env.points);
  REQUIRE(gains.per_airport.size() == 2);
  for (const auto& g : gains.per_airport) CHECK(g.gain >= 0.0);
  CHECK(gains.per_airport[0].gain == 0.0);  // on the envelope
  CHECK_THAT(gains.per_airport[1].gain,
             Catch::Matchers::WithinRel(3.0 * 1'000'001, 1e-12));
  CHECK_THAT(gains.system_gain, Catch::Matchers::WithinRel(3.0 * 1'000'001, 1e-12));
}

TEST_CASE("pso unit costs reproduce the published network figures") {
  const auto net = finnmark_like();
  CHECK_THAT(net.total_rpk(), Catch::Matchers::WithinRel(19'412'681.0, 1e-9));

  CHECK_THAT(pso_average_cost(net, 264'329'000.0), Catch::Matchers::WithinAbs(13.62, 0.01));
  CHECK_THAT(pso_breakeven_cost(net), Catch::Matchers::WithinAbs(3.34, 0.01));
  CHECK_THAT(pso_residual(net, 4.02), Catch::Matchers::WithinRel(-13.2e6, 0.005));

  // Average cost and residual round-trip exactly.
  const double cost = 264'329'000.0;
  const double crpk = pso_average_cost(net, cost);
  CHECK_THAT(pso_residual(net, crpk),
             Catch::Matchers::WithinAbs(net.total_revenue() - cost, 1e-3));
}

TEST_CASE("distance-scaled unit costs solve in closed form") {
  SECTION("island shuttle route") {
    PsoNetwork net;
    net.routes.push_back({"VRY", "BOO", 85.0, 6.7 * 9'063 * 85.0, 9'063.0});
    const double rrpk = net.routes[0].rrpk();
    CHECK_THAT(rrpk, Catch::Matchers::WithinAbs(6.7, 1e-9));

    const double target = -51.3 * net.total_rpk();
    const double lambda = pso_lambda_solve(net, target);
    CHECK_THAT(lambda, Catch::Matchers::WithinAbs(287.0, 1.0));
    CHECK_THAT(distance_scaled_cost(lambda, 85.0), Catch::Matchers::WithinAbs(58.0, 0.01));

    const auto table = subsidy_per_pax(net, [&](const PsoRoute& r) {
      return distance_scaled_cost(lambda, r.distance_km);
    });
    REQUIRE(table.size() == 1);
    CHECK_THAT(std::abs(table[0].subsidy_per_pax), Catch::Matchers::WithinRel(4341.0, 0.015));
  }
  SECTION("zero target on a uniform-distance network") {
    PsoNetwork net;
    for (int i = 0; i < 4; ++i)
      net.routes.push_back({"O" + std::to_string(i), "D", 100.0, 5.0 * 1000.0 * 100.0, 1000.0});
    const double lambda = pso_lambda_solve(net, 0.0);
    CHECK_THAT(lambda, Catch::Matchers::WithinRel(5.0 * std::pow(100.0, 0.36), 1e-9));
  }
  SECTION("closed form agrees with bisection") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> km(40.0, 900.0);
    std::uniform_real_distribution<double> fare(300.0, 900.0);
    std::uniform_real_distribution<double> pax(500.0, 20'000.0);
    for (int trial = 0; trial < 20; ++trial) {
      PsoNetwork net;
      for (int i = 0; i < 12; ++i) {
        const double p = pax(rng);
        net.routes.push_back({"O" + std::to_string(i), "D", km(rng), fare(rng) * p, p});
      }
      const double target = -0.8 * net.total_revenue() * (trial + 1);
      const double closed = pso_lambda_solve(net, target);
      const double bisect = pso_lambda_bisect(net, target);
      CHECK_THAT(bisect, Catch::Matchers::WithinAbs(closed, 1e-9 * std::max(1.0, closed)));
      // The residual map is strictly decreasing in lambda.
      CHECK(pso_lambda_residual(net, closed + 1.0) < pso_lambda_residual(net, closed));
    }
  }
  SECTION("network subsidy identity") {
    const auto net = finnmark_like();
    const double lambda = pso_lambda_solve(net, net.network_subsidy);
    const auto table = subsidy_per_pax(net, [&](const PsoRoute& r) {
      return distance_scaled_cost(lambda, r.distance_km);
    });
    double total = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i)
      total += table[i].subsidy_per_pax * net.routes[i].pax;
    CHECK_THAT(total, Catch::Matchers::WithinRel(net.network_subsidy, 1e-6));
  }
  CHECK_THROWS_AS(distance_scaled_cost(1.0, 0.0), std::domain_error);
}

TEST_CASE("compound growth and od shares") {
  CHECK_THAT(growth_multiplier(0.05, 17), Catch::Matchers::WithinAbs(2.29, 0.005));
  CHECK(std::lround(compound_growth(127.0, 0.05, 17)) == 291);
  CHECK(compound_growth(500.0, 0.0, 25) == 500.0);
  CHECK_THROWS(compound_growth(1.0, -1.0, 1.0));

  using airkit::core::Direction;
  using airkit::core::Flight;
  std::vector<Flight> flights;
  Flight f;
  f.flight_id = "X";
  f.origin = "AAA";
  f.destination = "BBB";
  f.direction = Direction::Departure;
  flights.push_back(f);
  const auto m = od_matrix(flights);
  REQUIRE(m.size() == 1);
  CHECK(m.at({"AAA", "BBB"}) == 100.0);

  f.destination = "CCC";
  flights.push_back(f);
  flights.push_back(f);
  const auto m2 = od_matrix(flights);
  double sum = 0.0;
  for (const auto& [_, share] : m2) sum += share;
  CHECK_THAT(sum, Catch::Matchers::WithinAbs(100.0, 1e-6));
}

TEST_CASE("workload units equate passengers and cargo") {
  AirportYear y{"A", 2010, 1000, 0, 0};
  CHECK(y.wlu() == 1000.0);
  y.pax = 0;
  y.cargo_kg = 100.0;
  CHECK(y.wlu() == 1.0);
  y.pax = 500;
  y.cargo_kg = 25'000.0;
  CHECK(y.wlu() == 750.0);
}
