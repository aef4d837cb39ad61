#include "latsum/table_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latsum/errors.hpp"

namespace latsum {

using nlohmann::json;

void save_table(const CoefficientTable& table, std::ostream& out) {
  json rows = json::array();
  for (const CoefficientRow& row : table.rows) {
    json values = json::array();
    for (const Rational& v : row.values) values.push_back(v.str());
    rows.push_back(json{{"j", row.j},
                        {"support", {row.support_lo, row.support_hi}},
                        {"values", std::move(values)},
                        {"tail", row.tail.str()}});
  }
  const json doc{{"model", model_name(table.model)},
                 {"max_order", table.max_order},
                 {"rows", std::move(rows)},
                 {"metadata",
                  {{"generator", table.metadata.generator},
                   {"manifest", table.metadata.manifest}}}};
  out << doc.dump(1) << "\n";
}

void save_table(const CoefficientTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("save_table: cannot open '" + path + "'");
  save_table(table, out);
}

namespace {

Rational parse_field(const json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where + ": expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const FormatError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

}  // namespace

CoefficientTable load_table(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("load_table: ") + e.what());
  }
  try {
    CoefficientTable table;
    table.model = model_from_name(doc.at("model").get<std::string>());
    table.max_order = doc.at("max_order").get<int>();
    if (doc.contains("metadata")) {
      const json& m = doc.at("metadata");
      table.metadata.generator = m.value("generator", "");
      table.metadata.manifest = m.value("manifest", "");
    }
    const json& rows = doc.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != table.max_order + 1) {
      throw FormatError("load_table: rows must be an array of size max_order+1");
    }
    int expected_j = 0;
    for (const json& r : rows) {
      CoefficientRow row;
      row.j = r.at("j").get<int>();
      const std::string where = "row j=" + std::to_string(row.j);
      if (row.j != expected_j++) throw FormatError(where + ": rows out of order");
      const json& support = r.at("support");
      if (!support.is_array() || support.size() != 2) {
        throw FormatError(where + ": support must be [lo, hi]");
      }
      row.support_lo = support[0].get<long>();
      row.support_hi = support[1].get<long>();
      const json& values = r.at("values");
      if (!values.is_array() ||
          static_cast<long>(values.size()) != std::max(0L, row.support_hi - row.support_lo + 1)) {
        throw FormatError(where + ": values length does not match support");
      }
      long site = row.support_lo;
      for (const json& v : values) {
        row.values.push_back(parse_field(v, where + " site n=" + std::to_string(site++)));
      }
      row.tail = parse_field(r.at("tail"), where + " tail");
      table.rows.push_back(std::move(row));
    }
    return table;
  } catch (const json::exception& e) {
    throw FormatError(std::string("load_table: ") + e.what());
  }
}

CoefficientTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("load_table: cannot open '" + path + "'");
  return load_table(in);
}

}  // namespace latsum
