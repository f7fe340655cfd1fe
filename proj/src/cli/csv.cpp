#include "mimofbl/cli/csv.hpp"

#include <charconv>
#include <system_error>

namespace mimofbl::cli {

void CsvTable::add_meta(const std::string& key, const std::string& value) {
  metadata.emplace_back(key, value);
}
void CsvTable::add_meta(const std::string& key, double value) {
  metadata.emplace_back(key, format_double(value));
}
void CsvTable::add_meta(const std::string& key, long long value) {
  metadata.emplace_back(key, format_int(value));
}
void CsvTable::add_meta(const std::string& key, std::uint64_t value) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  metadata.emplace_back(key, std::string(buf, res.ptr));
}

std::string format_double(double v) {
  // Shortest text that parses back to the identical double; never loses
  // precision and never depends on locale.
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_int(long long v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string CsvTable::to_text() const {
  std::string out;
  for (const auto& [key, value] : metadata) {
    out += "# ";
    out += key;
    out += "=";
    out += value;
    out += "\n";
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ",";
    out += header[i];
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

}  // namespace mimofbl::cli
