#pragma once

#include <iosfwd>
#include <string>

#include "latsum/lattice.hpp"

namespace latsum {

/// Writes the table as UTF-8 JSON with bit-exact "num/den" rationals.
/// Identical tables serialize to identical bytes.
void save_table(const CoefficientTable& table, std::ostream& out);
void save_table(const CoefficientTable& table, const std::string& path);

/// Throws FormatError with a field diagnostic on malformed input.
/// Non-reduced rationals are accepted and normalized.
CoefficientTable load_table(std::istream& in);
CoefficientTable load_table(const std::string& path);

}  // namespace latsum
