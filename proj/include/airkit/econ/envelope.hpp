#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace airkit::econ {

/// One airport-year of traffic and operating result. Financial figures are
/// expected pre-normalized (constant prices, common currency).
struct AirportYear {
  std::string airport;
  int year{0};
  double pax{0.0};
  double cargo_kg{0.0};
  double ebit{0.0};

  double wlu() const { return pax + cargo_kg / 100.0; }
};

enum class OutputUnit { PAX, WLU };

struct EnvelopePoint {
  std::string airport;
  int year{0};
  double volume{0.0};  // pax or wlu
  double ratio{0.0};   // ebit per unit
  double benchmark{0.0};
};

struct EnvelopeResult {
  std::vector<EnvelopePoint> points;
  std::vector<std::string> warnings;  // zero-volume records excluded
};

/// Profitability envelope: sort ascending by output volume, then run the
/// prefix maximum of the per-unit EBIT ratio as the benchmark.
inline EnvelopeResult profitability_envelope(const std::vector<AirportYear>& data,
                                             OutputUnit unit = OutputUnit::PAX) {
  if (data.empty()) throw std::invalid_argument("no records");
  EnvelopeResult out;
  for (const auto& r : data) {
    const double volume = unit == OutputUnit::PAX ? r.pax : r.wlu();
    if (!(volume > 0.0)) {
      out.warnings.push_back(r.airport + "/" + std::to_string(r.year) +
                             ": zero output, ratio undefined, excluded");
      continue;
    }
    out.points.push_back({r.airport, r.year, volume, r.ebit / volume, 0.0});
  }
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const EnvelopePoint& a, const EnvelopePoint& b) {
                     return a.volume < b.volume;
                   });
  double benchmark = 0.0;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    benchmark = i == 0 ? out.points[i].ratio : std::max(benchmark, out.points[i].ratio);
    out.points[i].benchmark = benchmark;
  }
  return out;
}

struct BreakEvenBracket {
  double last_loss_volume{0.0};
  double first_profit_volume{0.0};
};

/// Bracket around the first sign change of the running benchmark; a zero
/// benchmark counts as the profitable side.
inline std::optional<BreakEvenBracket> break_even_bracket(
    const std::vector<EnvelopePoint>& envelope) {
  for (std::size_t i = 1; i < envelope.size(); ++i) {
    if (envelope[i - 1].benchmark < 0.0 && envelope[i].benchmark >= 0.0)
      return BreakEvenBracket{envelope[i - 1].volume, envelope[i].volume};
  }
  return std::nullopt;
}

struct EfficiencyGain {
  std::string airport;
  int year{0};
  double gain{0.0};  // (benchmark - ratio) * volume, >= 0
};

struct EfficiencyGains {
  std::vector<EfficiencyGain> per_airport;
  double system_gain{0.0};
};

/// Potential gain per record if it reached the benchmark at its own volume.
inline EfficiencyGains efficiency_gains(const std::vector<EnvelopePoint>& envelope) {
  EfficiencyGains out;
  for (const auto& p : envelope) {
    const double gain = (p.benchmark - p.ratio) * p.volume;
    out.per_airport.push_back({p.airport, p.year, gain});
    out.system_gain += gain;
  }
  return out;
}

}  // namespace airkit::econ
