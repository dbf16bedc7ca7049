#pragma once

#include <stdexcept>

namespace airkit::cap {

enum class Facility {
  CheckInEconomy,
  CheckInBusiness,
  PassportIn,
  PassportOut,
  BaggageClaim,
  Security,
};

/// Waiting-time bands as the guideline table prints them: one threshold row
/// covering A-C, one covering D-E, everything beyond is F.
enum class LosBand { A_to_C, D_to_E, F };

/// Simultaneous occupants from hourly volume and dwell time (Little's Law).
/// An estimate: dwell approximated by connecting times misses some processes.
inline double terminal_occupancy(double hourly_pax, double dwell_h) {
  if (hourly_pax < 0.0 || dwell_h < 0.0)
    throw std::invalid_argument("volume and dwell must be non-negative");
  return hourly_pax * dwell_h;
}

inline LosBand terminal_los(Facility facility, double wait_min) {
  if (wait_min < 0.0) throw std::invalid_argument("wait must be non-negative");
  double a_to_c = 0.0, d_to_e = 0.0;
  switch (facility) {
    case Facility::CheckInEconomy: a_to_c = 12.0; d_to_e = 30.0; break;
    case Facility::CheckInBusiness: a_to_c = 3.0; d_to_e = 5.0; break;
    case Facility::PassportIn: a_to_c = 7.0; d_to_e = 15.0; break;
    case Facility::PassportOut: a_to_c = 5.0; d_to_e = 10.0; break;
    case Facility::BaggageClaim: a_to_c = 12.0; d_to_e = 18.0; break;
    case Facility::Security: a_to_c = 3.0; d_to_e = 7.0; break;
  }
  if (wait_min <= a_to_c) return LosBand::A_to_C;
  if (wait_min <= d_to_e) return LosBand::D_to_E;
  return LosBand::F;
}

}  // namespace airkit::cap
