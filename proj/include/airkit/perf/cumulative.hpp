#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace airkit::perf {

/// Demand/service time pair for one unit moving through a queue.
struct QueueSample {
  double demand_time{0.0};
  double service_time{0.0};  // >= demand_time
};

/// Step functions of cumulative demand and cumulative service over time.
/// The vertical gap is the queue length, the horizontal gap the wait of the
/// n-th unit.
class CumulativeDiagram {
 public:
  explicit CumulativeDiagram(std::vector<QueueSample> samples) : samples_(std::move(samples)) {
    for (const auto& s : samples_)
      if (s.service_time < s.demand_time)
        throw std::invalid_argument("service before demand");
    demand_times_.reserve(samples_.size());
    service_times_.reserve(samples_.size());
    for (const auto& s : samples_) {
      demand_times_.push_back(s.demand_time);
      service_times_.push_back(s.service_time);
    }
    std::sort(demand_times_.begin(), demand_times_.end());
    std::sort(service_times_.begin(), service_times_.end());
  }

  std::size_t size() const { return samples_.size(); }

  double cum_demand(double t) const { return count_leq(demand_times_, t); }
  double cum_served(double t) const { return count_leq(service_times_, t); }

  double queue_length(double t) const { return cum_demand(t) - cum_served(t); }

  /// Horizontal gap at count n (1-based): service time minus demand time of
  /// the n-th unit in FCFS order.
  double wait_of_nth(std::size_t n) const {
    if (n == 0 || n > samples_.size()) throw std::out_of_range("n out of range");
    return service_times_[n - 1] - demand_times_[n - 1];
  }

  /// Area between the two curves; equals the summed per-unit waits.
  double total_wait() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < samples_.size(); ++i)
      sum += service_times_[i] - demand_times_[i];
    return sum;
  }

  const std::vector<double>& demand_times() const { return demand_times_; }
  const std::vector<double>& service_times() const { return service_times_; }

 private:
  static double count_leq(const std::vector<double>& v, double t) {
    return static_cast<double>(std::upper_bound(v.begin(), v.end(), t) - v.begin());
  }

  std::vector<QueueSample> samples_;
  std::vector<double> demand_times_;
  std::vector<double> service_times_;
};

}  // namespace airkit::perf
