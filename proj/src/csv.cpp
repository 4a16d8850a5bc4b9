#include "bdris/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "bdris/errors.hpp"

namespace bdris {

std::string format_double(double v) {
  char buf[64];
  // %.17g with the C locale always uses '.', which is the CSV contract.
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Table::add(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::logic_error("csv: row width does not match header");
  }
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& out, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out << ',';
      out << cells[k];
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void write_csv_file(const std::string& path, const Table& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  write_csv(out, t);
}

}  // namespace bdris
