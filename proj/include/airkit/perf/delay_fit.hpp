#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace airkit::perf {

/// Exponential delay model: avg_delay = a * exp(b * daily_flights).
struct DelayFit {
  double a{0.0};
  double b{0.0};
  double r2{0.0};
};

struct DelayPoint {
  double daily_flights{0.0};
  double avg_delay_min{0.0};
};

inline double delay_cost_eur(double total_delay_min, double rate_eur_per_min = 42.0) {
  if (total_delay_min < 0.0 || rate_eur_per_min < 0.0)
    throw std::invalid_argument("delay and rate must be non-negative");
  return total_delay_min * rate_eur_per_min;
}

/// Least squares of ln(delay) on daily flights. Points with non-positive
/// delay carry no information for the log model and are skipped.
inline DelayFit fit_delay_curve(const std::vector<DelayPoint>& points) {
  std::vector<DelayPoint> usable;
  for (const auto& p : points)
    if (p.avg_delay_min > 0.0) usable.push_back(p);
  if (usable.size() < 3) throw std::invalid_argument("need at least 3 points with positive delay");

  const double n = static_cast<double>(usable.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : usable) {
    const double x = p.daily_flights;
    const double y = std::log(p.avg_delay_min);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("degenerate x values");
  DelayFit fit;
  fit.b = (n * sxy - sx * sy) / denom;
  fit.a = std::exp((sy - fit.b * sx) / n);

  const double mean_y = sy / n;
  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& p : usable) {
    const double y = std::log(p.avg_delay_min);
    const double yhat = std::log(fit.a) + fit.b * p.daily_flights;
    ss_res += (y - yhat) * (y - yhat);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

/// Invert the fit at a maximum acceptable delay: daily flights where the
/// modeled average delay reaches los_min.
inline double practical_capacity(const DelayFit& fit, double los_min) {
  if (!(fit.b > 0.0)) throw std::domain_error("flat or decreasing delay curve");
  if (!(los_min > fit.a)) throw std::domain_error("LOS at or below the curve intercept");
  return std::log(los_min / fit.a) / fit.b;
}

}  // namespace airkit::perf
