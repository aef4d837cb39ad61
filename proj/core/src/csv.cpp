#include "latsum/csv.hpp"

#include <fstream>
#include <sstream>

#include "latsum/errors.hpp"

namespace latsum {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw FormatError("csv: no column named '" + name + "'");
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size()) {
        throw FormatError("csv: line " + std::to_string(lineno) + " has " +
                          std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_csv: cannot open '" + path + "'");
  return read_csv(in);
}

}  // namespace latsum
