#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "airkit/core/time.hpp"

namespace airkit::core {

/// Wake turbulence category by maximum take-off weight.
enum class WtcClass : std::uint8_t { Heavy, Medium, Light };

/// Heavy above 136 t, Light below 7 t, Medium in between (inclusive).
inline WtcClass wtc_from_mtow(double mtow_tonnes) {
  if (!(mtow_tonnes > 0.0)) throw std::invalid_argument("mtow must be positive");
  if (mtow_tonnes > 136.0) return WtcClass::Heavy;
  if (mtow_tonnes < 7.0) return WtcClass::Light;
  return WtcClass::Medium;
}

inline char wtc_letter(WtcClass c) {
  switch (c) {
    case WtcClass::Heavy: return 'H';
    case WtcClass::Medium: return 'M';
    case WtcClass::Light: return 'L';
  }
  return '?';
}

inline WtcClass wtc_from_letter(char c) {
  switch (c) {
    case 'H': case 'h': return WtcClass::Heavy;
    case 'M': case 'm': return WtcClass::Medium;
    case 'L': case 'l': return WtcClass::Light;
  }
  throw std::invalid_argument(std::string("unknown WTC letter: ") + c);
}

/// Aircraft type with idle-thrust emission factors (per engine).
struct AircraftType {
  std::string code;
  double mtow_tonnes{0.0};
  int seats{0};
  int engines{1};
  double fuel_flow_idle_kg_per_s{0.0};
  double ei_hc_g_per_kg{0.0};
  double ei_co_g_per_kg{0.0};
  double ei_nox_g_per_kg{0.0};

  WtcClass wtc() const { return wtc_from_mtow(mtow_tonnes); }
};

using Fleet = std::map<std::string, AircraftType>;

enum class Direction : std::uint8_t { Arrival, Departure };

/// One scheduled or operated movement.
struct Flight {
  std::string flight_id;
  std::string carrier;
  std::optional<std::string> tail;
  std::string origin;
  std::string destination;
  Direction direction{Direction::Arrival};
  UtcMinutes sched_time{};
  std::optional<UtcMinutes> actual_time;
  std::string aircraft_code;
  std::optional<AircraftType> aircraft;

  std::optional<std::int64_t> delay_min() const {
    if (!actual_time) return std::nullopt;
    return *actual_time - sched_time;
  }
};

/// Same-tail flight sequence of one day; leg index is the panel time.
struct Rotation {
  std::string tail;
  CivilDate day;
  std::vector<Flight> legs;
  /// Legs whose origin does not match the previous destination (1-based leg index).
  std::vector<int> continuity_violations;
};

struct Airport {
  std::string iata;
  std::string icao;
  double lat_deg{0.0};
  double lon_deg{0.0};
};

enum class WeatherCondition : std::uint8_t { Sun, Cloud, Fog, Haze, Rain, Snow, Thunder };

inline WeatherCondition weather_from_string(const std::string& s) {
  if (s == "Sun" || s == "sun") return WeatherCondition::Sun;
  if (s == "Cloud" || s == "cloud") return WeatherCondition::Cloud;
  if (s == "Fog" || s == "fog") return WeatherCondition::Fog;
  if (s == "Haze" || s == "haze") return WeatherCondition::Haze;
  if (s == "Rain" || s == "rain") return WeatherCondition::Rain;
  if (s == "Snow" || s == "snow") return WeatherCondition::Snow;
  if (s == "Thunder" || s == "thunder") return WeatherCondition::Thunder;
  throw std::invalid_argument("unknown weather condition: " + s);
}

inline std::string to_string(WeatherCondition c) {
  switch (c) {
    case WeatherCondition::Sun: return "Sun";
    case WeatherCondition::Cloud: return "Cloud";
    case WeatherCondition::Fog: return "Fog";
    case WeatherCondition::Haze: return "Haze";
    case WeatherCondition::Rain: return "Rain";
    case WeatherCondition::Snow: return "Snow";
    case WeatherCondition::Thunder: return "Thunder";
  }
  return "?";
}

struct WeatherRecord {
  std::string airport;
  UtcMinutes time{};
  WeatherCondition condition{WeatherCondition::Sun};
  double temperature_c{0.0};
  std::optional<double> wind_speed;
  std::optional<double> visibility;
  std::optional<double> pressure;
  std::optional<double> humidity;
};

}  // namespace airkit::core
