#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace airkit::core {

/// Minimal RFC-4180 style CSV reader: quoted fields, embedded commas and
/// quotes, CRLF tolerant. Rows are addressed by header name.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {
    std::vector<std::string> header;
    if (!read_record(header)) return;
    for (std::size_t i = 0; i < header.size(); ++i) columns_[header[i]] = i;
    has_header_ = true;
  }

  bool has_header() const { return has_header_; }

  bool has_column(const std::string& name) const { return columns_.count(name) > 0; }

  /// Throws if a mandatory column is missing, naming it.
  void require_columns(const std::vector<std::string>& names) const {
    for (const auto& n : names)
      if (!has_column(n)) throw std::runtime_error("missing mandatory column: " + n);
  }

  bool next(std::vector<std::string>& fields) { return read_record(fields); }

  const std::string& field(const std::vector<std::string>& fields,
                           const std::string& column) const {
    static const std::string empty;
    auto it = columns_.find(column);
    if (it == columns_.end() || it->second >= fields.size()) return empty;
    return fields[it->second];
  }

 private:
  bool read_record(std::vector<std::string>& fields) {
    fields.clear();
    std::string cell;
    bool in_quotes = false;
    bool any = false;
    int c;
    while ((c = in_.get()) != EOF) {
      any = true;
      const char ch = static_cast<char>(c);
      if (in_quotes) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            cell.push_back('"');
            in_.get();
          } else {
            in_quotes = false;
          }
        } else {
          cell.push_back(ch);
        }
      } else if (ch == '"') {
        in_quotes = true;
      } else if (ch == ',') {
        fields.push_back(std::move(cell));
        cell.clear();
      } else if (ch == '\n') {
        fields.push_back(std::move(cell));
        return true;
      } else if (ch != '\r') {
        cell.push_back(ch);
      }
    }
    if (!any) return false;
    fields.push_back(std::move(cell));
    return true;
  }

  std::istream& in_;
  std::map<std::string, std::size_t> columns_;
  bool has_header_{false};
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << '\n';
}

}  // namespace airkit::core
