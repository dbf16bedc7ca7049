#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "airkit/core/csv.hpp"
#include "airkit/core/types.hpp"

namespace airkit::core {

/// Per-airport weather series sorted by time.
class WeatherTable {
 public:
  explicit WeatherTable(std::vector<WeatherRecord> records) {
    for (auto& r : records) by_airport_[r.airport].push_back(std::move(r));
    for (auto& [_, v] : by_airport_)
      std::stable_sort(v.begin(), v.end(), [](const WeatherRecord& a, const WeatherRecord& b) {
        return a.time < b.time;
      });
  }

  /// Latest record at `airport` within [t - window_min, t]; none if absent.
  std::optional<WeatherRecord> latest_in_window(const std::string& airport, UtcMinutes t,
                                                int window_min = 30) const {
    auto it = by_airport_.find(airport);
    if (it == by_airport_.end()) return std::nullopt;
    const auto& v = it->second;
    auto ub = std::upper_bound(v.begin(), v.end(), t,
                               [](UtcMinutes t0, const WeatherRecord& r) { return t0 < r.time; });
    if (ub == v.begin()) return std::nullopt;
    const auto& candidate = *std::prev(ub);
    if (t - candidate.time > window_min) return std::nullopt;
    return candidate;
  }

 private:
  std::map<std::string, std::vector<WeatherRecord>> by_airport_;
};

/// Pair each flight with the weather governing its operation: origin weather
/// prior to a departure, destination weather prior to an arrival, sampled in
/// a half-hour window. Actual times take precedence over schedule.
inline std::vector<std::pair<Flight, std::optional<WeatherRecord>>> join_weather(
    const std::vector<Flight>& flights, const WeatherTable& weather, int window_min = 30) {
  std::vector<std::pair<Flight, std::optional<WeatherRecord>>> out;
  out.reserve(flights.size());
  for (const auto& f : flights) {
    const std::string& where =
        f.direction == Direction::Departure ? f.origin : f.destination;
    const UtcMinutes when = f.actual_time.value_or(f.sched_time);
    out.emplace_back(f, weather.latest_in_window(where, when, window_min));
  }
  return out;
}

inline std::vector<WeatherRecord> parse_weather(std::istream& in) {
  CsvReader csv(in);
  csv.require_columns({"airport", "timestamp_utc", "condition", "temperature_c"});
  std::vector<WeatherRecord> records;
  std::vector<std::string> row;
  auto opt_field = [&](const std::vector<std::string>& r, const char* col)
      -> std::optional<double> {
    if (!csv.has_column(col)) return std::nullopt;
    const auto& s = csv.field(r, col);
    if (s.empty()) return std::nullopt;
    return std::stod(s);
  };
  while (csv.next(row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    WeatherRecord r;
    r.airport = csv.field(row, "airport");
    // timestamp_utc: "YYYY-MM-DD HH:MM"
    const auto& ts = csv.field(row, "timestamp_utc");
    if (ts.size() != 16) throw std::runtime_error("bad timestamp_utc: " + ts);
    r.time = to_utc(parse_date(ts.substr(0, 10)), parse_hhmm(ts.substr(11, 5)), 0);
    r.condition = weather_from_string(csv.field(row, "condition"));
    r.temperature_c = std::stod(csv.field(row, "temperature_c"));
    r.wind_speed = opt_field(row, "wind_speed");
    r.visibility = opt_field(row, "visibility");
    r.pressure = opt_field(row, "pressure");
    r.humidity = opt_field(row, "humidity");
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace airkit::core
