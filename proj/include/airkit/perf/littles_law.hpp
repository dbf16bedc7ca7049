#pragma once

#include <stdexcept>

namespace airkit::perf {

/// W = L / lambda: mean wait from mean queue length and mean arrival rate.
inline double littles_wait(double queue_length, double arrival_rate) {
  if (!(arrival_rate > 0.0)) throw std::domain_error("arrival rate must be positive");
  return queue_length / arrival_rate;
}

/// L = lambda * W.
inline double littles_length(double arrival_rate, double wait) {
  return arrival_rate * wait;
}

/// lambda = L / W.
inline double littles_rate(double queue_length, double wait) {
  if (!(wait > 0.0)) throw std::domain_error("wait must be positive");
  return queue_length / wait;
}

}  // namespace airkit::perf
