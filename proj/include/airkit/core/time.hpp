#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace airkit::core {

/// Calendar date (UTC).
struct CivilDate {
  int year{1970};
  unsigned month{1};
  unsigned day{1};

  friend auto operator<=>(const CivilDate&, const CivilDate&) = default;
};

/// Minute-resolution UTC timestamp, stored as minutes since the Unix epoch.
struct UtcMinutes {
  std::int64_t value{0};

  friend auto operator<=>(const UtcMinutes&, const UtcMinutes&) = default;
  friend UtcMinutes operator+(UtcMinutes t, std::int64_t m) { return {t.value + m}; }
  friend UtcMinutes operator-(UtcMinutes t, std::int64_t m) { return {t.value - m}; }
  friend std::int64_t operator-(UtcMinutes a, UtcMinutes b) { return a.value - b.value; }
};

inline std::int64_t days_since_epoch(const CivilDate& d) {
  const std::chrono::year_month_day ymd{std::chrono::year{d.year},
                                        std::chrono::month{d.month},
                                        std::chrono::day{d.day}};
  if (!ymd.ok()) throw std::invalid_argument("invalid civil date");
  return std::chrono::sys_days{ymd}.time_since_epoch().count();
}

inline CivilDate civil_from_days(std::int64_t days) {
  const std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days}}};
  return {static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
          static_cast<unsigned>(ymd.day())};
}

/// Weekday with Monday = 0 ... Sunday = 6.
inline int weekday_of(const CivilDate& d) {
  const std::chrono::weekday wd{std::chrono::sys_days{std::chrono::days{days_since_epoch(d)}}};
  return static_cast<int>(wd.iso_encoding()) - 1;
}

inline bool is_friday(const CivilDate& d) { return weekday_of(d) == 4; }

inline CivilDate date_of(UtcMinutes t) {
  std::int64_t days = t.value / 1440;
  if (t.value < 0 && t.value % 1440 != 0) --days;
  return civil_from_days(days);
}

inline int minute_of_day(UtcMinutes t) {
  std::int64_t m = t.value % 1440;
  if (m < 0) m += 1440;
  return static_cast<int>(m);
}

inline int hour_of_day(UtcMinutes t) { return minute_of_day(t) / 60; }

/// Parse "YYYY-MM-DD".
inline CivilDate parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw std::invalid_argument("expected YYYY-MM-DD, got '" + std::string(s) + "'");
  auto num = [&](int pos, int len) {
    int v = 0;
    for (int i = pos; i < pos + len; ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad date digit");
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };
  return {num(0, 4), static_cast<unsigned>(num(5, 2)), static_cast<unsigned>(num(8, 2))};
}

/// Parse "HH:MM" into minutes past midnight.
inline int parse_hhmm(std::string_view s) {
  if (s.size() != 5 || s[2] != ':') throw std::invalid_argument("expected HH:MM");
  auto dig = [&](int i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad time digit");
    return s[i] - '0';
  };
  const int h = dig(0) * 10 + dig(1);
  const int m = dig(3) * 10 + dig(4);
  if (h > 23 || m > 59) throw std::invalid_argument("time out of range");
  return h * 60 + m;
}

/// Local civil date + HH:MM with a UTC offset in minutes -> UTC timestamp.
inline UtcMinutes to_utc(const CivilDate& local_date, int local_minute_of_day,
                         int utc_offset_min) {
  return {days_since_epoch(local_date) * 1440 + local_minute_of_day - utc_offset_min};
}

inline std::string format_date(const CivilDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", d.year, d.month, d.day);
  return buf;
}

inline std::string format_hhmm(int minute_of_day) {
  char buf[6];
  std::snprintf(buf, sizeof buf, "%02d:%02d", minute_of_day / 60, minute_of_day % 60);
  return buf;
}

}  // namespace airkit::core
