#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "airkit/core/csv.hpp"
#include "airkit/core/types.hpp"

namespace airkit::core {

struct RowError {
  std::size_t row;  // 1-based data row number (header excluded)
  std::string reason;
};

struct ScheduleParseResult {
  std::vector<Flight> flights;
  std::vector<RowError> errors;
};

inline const std::vector<std::string>& schedule_columns() {
  static const std::vector<std::string> cols = {
      "date",       "flight_id",  "carrier",    "tail",
      "origin",     "destination", "direction",  "sched_time",
      "actual_time", "aircraft_code", "utc_offset_min"};
  return cols;
}

/// Parse a schedule CSV. Malformed rows land in the error report instead of
/// being dropped. Times are local HH:MM converted to UTC via utc_offset_min.
/// An optional fleet resolves aircraft_code into embedded AircraftType values.
inline ScheduleParseResult parse_schedule(std::istream& in, const Fleet* fleet = nullptr) {
  CsvReader csv(in);
  ScheduleParseResult result;
  if (!csv.has_header()) return result;
  csv.require_columns({"date", "flight_id", "carrier", "origin", "destination",
                       "direction", "sched_time"});

  std::vector<std::string> row;
  std::size_t row_no = 0;
  while (csv.next(row)) {
    ++row_no;
    if (row.size() == 1 && row[0].empty()) continue;  // blank line
    try {
      Flight f;
      const CivilDate date = parse_date(csv.field(row, "date"));
      f.flight_id = csv.field(row, "flight_id");
      f.carrier = csv.field(row, "carrier");
      if (const auto& t = csv.field(row, "tail"); !t.empty()) f.tail = t;
      f.origin = csv.field(row, "origin");
      f.destination = csv.field(row, "destination");
      if (f.origin == f.destination)
        throw std::invalid_argument("origin equals destination");
      const auto& dir = csv.field(row, "direction");
      if (dir == "A" || dir == "arrival" || dir == "Arrival") f.direction = Direction::Arrival;
      else if (dir == "D" || dir == "departure" || dir == "Departure")
        f.direction = Direction::Departure;
      else throw std::invalid_argument("unknown direction: " + dir);
      int offset = 0;
      if (const auto& off = csv.field(row, "utc_offset_min"); !off.empty())
        offset = std::stoi(off);
      f.sched_time = to_utc(date, parse_hhmm(csv.field(row, "sched_time")), offset);
      if (const auto& at = csv.field(row, "actual_time"); !at.empty()) {
        UtcMinutes actual = to_utc(date, parse_hhmm(at), offset);
        // Midnight wrap: an actual time far before schedule is the next day.
        if (actual - f.sched_time < -720) actual = actual + 1440;
        f.actual_time = actual;
      }
      f.aircraft_code = csv.field(row, "aircraft_code");
      if (fleet && !f.aircraft_code.empty()) {
        auto it = fleet->find(f.aircraft_code);
        if (it != fleet->end()) f.aircraft = it->second;
      }
      result.flights.push_back(std::move(f));
    } catch (const std::exception& e) {
      result.errors.push_back({row_no, e.what()});
    }
  }
  return result;
}

inline void serialize_schedule(std::ostream& out, const std::vector<Flight>& flights) {
  write_csv_row(out, schedule_columns());
  for (const auto& f : flights) {
    std::vector<std::string> row;
    row.push_back(format_date(date_of(f.sched_time)));
    row.push_back(f.flight_id);
    row.push_back(f.carrier);
    row.push_back(f.tail.value_or(""));
    row.push_back(f.origin);
    row.push_back(f.destination);
    row.push_back(f.direction == Direction::Arrival ? "A" : "D");
    row.push_back(format_hhmm(minute_of_day(f.sched_time)));
    if (f.actual_time) {
      // Actual times on the next UTC day serialize as the wrapped HH:MM.
      row.push_back(format_hhmm(minute_of_day(*f.actual_time)));
    } else {
      row.push_back("");
    }
    row.push_back(f.aircraft_code);
    row.push_back("0");
    write_csv_row(out, row);
  }
}

/// Aircraft-type CSV mirroring the emission factor table columns.
inline Fleet parse_fleet(std::istream& in) {
  CsvReader csv(in);
  csv.require_columns({"aircraft_type", "engines", "ei_hc_g_per_kg", "ei_co_g_per_kg",
                       "ei_nox_g_per_kg", "fuel_flow_idle_kg_per_s"});
  Fleet fleet;
  std::vector<std::string> row;
  while (csv.next(row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    AircraftType t;
    t.code = csv.field(row, "aircraft_type");
    if (csv.has_column("mtow_tonnes") && !csv.field(row, "mtow_tonnes").empty())
      t.mtow_tonnes = std::stod(csv.field(row, "mtow_tonnes"));
    else
      t.mtow_tonnes = 70.0;  // Medium unless stated
    if (csv.has_column("seats") && !csv.field(row, "seats").empty())
      t.seats = std::stoi(csv.field(row, "seats"));
    t.engines = std::stoi(csv.field(row, "engines"));
    t.ei_hc_g_per_kg = std::stod(csv.field(row, "ei_hc_g_per_kg"));
    t.ei_co_g_per_kg = std::stod(csv.field(row, "ei_co_g_per_kg"));
    t.ei_nox_g_per_kg = std::stod(csv.field(row, "ei_nox_g_per_kg"));
    t.fuel_flow_idle_kg_per_s = std::stod(csv.field(row, "fuel_flow_idle_kg_per_s"));
    fleet[t.code] = t;
  }
  return fleet;
}

}  // namespace airkit::core
