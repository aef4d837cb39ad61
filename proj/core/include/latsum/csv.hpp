#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latsum {

/// Minimal CSV table: header row plus string cells.  Lines starting with
/// '#' (the manifest reference) are skipped on read.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column; throws FormatError if absent.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::string& path);

}  // namespace latsum
