#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "airkit/core/types.hpp"

namespace airkit::cap {

using core::WtcClass;

/// Wake-turbulence separation minima, indexed [leading][trailing].
///
/// The printed minima table is read leading-first: a Heavy leading a Light
/// requires 6 NM, a Light leading anything requires 3 NM. Departures are
/// spaced in seconds.
struct SeparationPolicy {
  std::array<std::array<double, 3>, 3> arrival_nm{};
  std::array<std::array<double, 3>, 3> departure_s{};
  double min_final_approach_nm{2.5};

  double arrival(WtcClass leading, WtcClass trailing) const {
    return arrival_nm[static_cast<int>(leading)][static_cast<int>(trailing)];
  }
  double departure(WtcClass leading, WtcClass trailing) const {
    return departure_s[static_cast<int>(leading)][static_cast<int>(trailing)];
  }

  void validate() const {
    for (const auto& row : arrival_nm)
      for (double v : row)
        if (!(v > 0.0)) throw std::invalid_argument("arrival separation must be positive");
    for (const auto& row : departure_s)
      for (double v : row)
        if (!(v > 0.0)) throw std::invalid_argument("departure separation must be positive");
    if (!(min_final_approach_nm > 0.0))
      throw std::invalid_argument("min final approach must be positive");
  }
};

/// Default matrices: arrivals H->H 4, H->M 5, H->L 6, M->L 5, others 3 NM;
/// departures H leading 120 s, M->L 120 s, M otherwise 60 s, L leading 50 s.
inline SeparationPolicy default_separation_policy() {
  SeparationPolicy p;
  p.arrival_nm = {{{4.0, 5.0, 6.0},    // leading Heavy
                   {3.0, 3.0, 5.0},    // leading Medium
                   {3.0, 3.0, 3.0}}};  // leading Light
  p.departure_s = {{{120.0, 120.0, 120.0},
                    {60.0, 60.0, 120.0},
                    {50.0, 50.0, 50.0}}};
  p.min_final_approach_nm = 2.5;
  return p;
}

struct SequenceSeparation {
  double total_nm{0.0};
  std::optional<double> avg_nm;  // undefined for a single movement
};

/// Sum of pairwise arrival minima along an ordered landing sequence.
inline SequenceSeparation sequence_separation(std::span<const WtcClass> classes,
                                              const SeparationPolicy& policy) {
  if (classes.empty()) throw std::invalid_argument("empty sequence");
  SequenceSeparation out;
  if (classes.size() == 1) return out;
  for (std::size_t i = 1; i < classes.size(); ++i)
    out.total_nm += policy.arrival(classes[i - 1], classes[i]);
  out.avg_nm = out.total_nm / static_cast<double>(classes.size() - 1);
  return out;
}

inline void to_json(nlohmann::json& j, const SeparationPolicy& p) {
  j = nlohmann::json{{"arrival_nm", p.arrival_nm},
                     {"departure_s", p.departure_s},
                     {"min_final_approach_nm", p.min_final_approach_nm}};
}

inline void from_json(const nlohmann::json& j, SeparationPolicy& p) {
  p = default_separation_policy();
  if (j.contains("arrival_nm")) j.at("arrival_nm").get_to(p.arrival_nm);
  if (j.contains("departure_s")) j.at("departure_s").get_to(p.departure_s);
  if (j.contains("min_final_approach_nm"))
    j.at("min_final_approach_nm").get_to(p.min_final_approach_nm);
  p.validate();
}

}  // namespace airkit::cap
