#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bdris {

/// Shortest round-trip-exact rendering ("%.17g"), '.' decimal separator.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

/// Header line then rows, comma separated, LF line endings.
void write_csv(std::ostream& out, const Table& t);
void write_csv_file(const std::string& path, const Table& t);

}  // namespace bdris
