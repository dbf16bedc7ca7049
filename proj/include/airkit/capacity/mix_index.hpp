#pragma once

#include <cmath>
#include <stdexcept>

namespace airkit::cap {

/// Traffic mix in percent shares of Heavy / Medium / Light movements.
///
/// Published mix tables print independently rounded shares, so a row can sum
/// to 102 (one scenario prints 20/65/17); validation allows that slack.
struct TrafficMix {
  double pct_heavy{0.0};
  double pct_medium{0.0};
  double pct_light{0.0};

  void validate() const {
    if (pct_heavy < 0.0 || pct_medium < 0.0 || pct_light < 0.0)
      throw std::invalid_argument("mix shares must be non-negative");
    if (std::abs(pct_heavy + pct_medium + pct_light - 100.0) > 2.5)
      throw std::invalid_argument("mix shares must sum to 100 (within print rounding)");
  }
};

/// MI = 3 * %Heavy + %Medium.
inline double mix_index(const TrafficMix& mix) {
  mix.validate();
  return 3.0 * mix.pct_heavy + mix.pct_medium;
}

}  // namespace airkit::cap
