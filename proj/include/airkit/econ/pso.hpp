#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace airkit::econ {

/// One subsidized route with demand-based unit figures.
struct PsoRoute {
  std::string origin;
  std::string destination;
  double distance_km{0.0};
  double revenue{0.0};
  double pax{0.0};

  double rpk() const { return pax * distance_km; }
  double fare() const { return pax > 0.0 ? revenue / pax : 0.0; }
  double rrpk() const { return rpk() > 0.0 ? revenue / rpk() : 0.0; }
};

/// A tendered route network with its annual subsidy (negative = deficit).
struct PsoNetwork {
  std::vector<PsoRoute> routes;
  double network_subsidy{0.0};

  double total_revenue() const {
    double r = 0.0;
    for (const auto& x : routes) r += x.revenue;
    return r;
  }
  double total_pax() const {
    double p = 0.0;
    for (const auto& x : routes) p += x.pax;
    return p;
  }
  double total_rpk() const {
    double s = 0.0;
    for (const auto& x : routes) s += x.rpk();
    return s;
  }
};

/// Weighted average unit cost per RPK from total operating cost.
inline double pso_average_cost(const PsoNetwork& net, double total_cost) {
  const double rpk = net.total_rpk();
  if (!(rpk > 0.0)) throw std::domain_error("network has no RPK");
  return total_cost / rpk;
}

/// Unit cost at which the network needs zero subsidy.
inline double pso_breakeven_cost(const PsoNetwork& net) {
  const double rpk = net.total_rpk();
  if (!(rpk > 0.0)) throw std::domain_error("network has no RPK");
  return net.total_revenue() / rpk;
}

/// Network profit (+) or required subsidy (-) at a flat unit cost c:
/// sum over routes of (rrpk_i - c) * rpk_i, which collapses to R - c * RPK.
/// The stepwise goal-seek of the source procedure converges to this line's
/// root; the closed form evaluates it directly.
inline double pso_residual(const PsoNetwork& net, double crpk) {
  return net.total_revenue() - crpk * net.total_rpk();
}

/// Distance-scaled unit cost c_i = lambda / d_i^exponent.
inline double distance_scaled_cost(double lambda, double distance_km, double exponent = 0.36) {
  if (!(distance_km > 0.0)) throw std::domain_error("distance must be positive");
  return lambda / std::pow(distance_km, exponent);
}

/// Residual under distance-scaled costs, affine decreasing in lambda.
inline double pso_lambda_residual(const PsoNetwork& net, double lambda, double exponent = 0.36) {
  double residual = 0.0;
  for (const auto& r : net.routes)
    residual += (r.rrpk() - distance_scaled_cost(lambda, r.distance_km, exponent)) * r.rpk();
  return residual;
}

/// Closed-form lambda with residual(lambda) = target_subsidy. The residual is
/// R - lambda * sum(rpk_i * d_i^-e), strictly decreasing, so the root is
/// unique.
inline double pso_lambda_solve(const PsoNetwork& net, double target_subsidy,
                               double exponent = 0.36) {
  double weight = 0.0;
  for (const auto& r : net.routes) weight += r.rpk() * std::pow(r.distance_km, -exponent);
  if (!(weight > 0.0)) throw std::domain_error("degenerate network: zero distance weight");
  return (net.total_revenue() - target_subsidy) / weight;
}

/// Bisection cross-check for the lambda root; brackets grow geometrically
/// until the residual changes sign.
inline double pso_lambda_bisect(const PsoNetwork& net, double target_subsidy,
                                double exponent = 0.36, double tol = 1e-12,
                                int max_iter = 500) {
  auto f = [&](double lam) { return pso_lambda_residual(net, lam, exponent) - target_subsidy; };
  double lo = 0.0, hi = 1.0;
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e18) throw std::domain_error("failed to bracket lambda root");
  }
  if (f(lo) < 0.0) throw std::domain_error("residual below target at lambda = 0");
  for (int i = 0; i < max_iter && hi - lo > tol * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct RouteSubsidy {
  std::string origin;
  std::string destination;
  double unit_cost{0.0};          // c_i applied to the route
  double subsidy_per_rpk{0.0};    // rrpk_i - c_i
  double route_subsidy{0.0};      // (rrpk_i - c_i) * rpk_i
  double subsidy_per_pax{0.0};    // route subsidy / pax
};

/// Per-route subsidy table for an arbitrary unit-cost function of the route.
inline std::vector<RouteSubsidy> subsidy_per_pax(
    const PsoNetwork& net, const std::function<double(const PsoRoute&)>& unit_cost) {
  std::vector<RouteSubsidy> out;
  out.reserve(net.routes.size());
  for (const auto& r : net.routes) {
    if (!(r.pax > 0.0)) throw std::domain_error("route without passengers: " + r.origin + "-" +
                                                r.destination);
    RouteSubsidy s;
    s.origin = r.origin;
    s.destination = r.destination;
    s.unit_cost = unit_cost(r);
    s.subsidy_per_rpk = r.rrpk() - s.unit_cost;
    s.route_subsidy = s.subsidy_per_rpk * r.rpk();
    s.subsidy_per_pax = s.route_subsidy / r.pax;
    out.push_back(s);
  }
  return out;
}

}  // namespace airkit::econ
