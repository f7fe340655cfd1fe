#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mimofbl::cli {

// Output table: '#' metadata preamble, one header row, preformatted data
// cells. All numeric text goes through std::to_chars, so the bytes are
// locale-independent and identical across reruns of the same spec.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
  void add_meta(const std::string& key, long long value);
  void add_meta(const std::string& key, std::uint64_t value);

  std::string to_text() const;
};

// Shortest round-trip decimal form (up to 17 significant digits).
std::string format_double(double v);
std::string format_int(long long v);

}  // namespace mimofbl::cli
