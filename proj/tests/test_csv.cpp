#include <doctest.h>

#include <sstream>

#include "latsum/csv.hpp"
#include "latsum/errors.hpp"

TEST_CASE("read_csv with manifest comment") {
  std::istringstream in("# manifest: run.manifest.json\nN,b0\n1,0.5\n2,0.25\n");
  auto table = latsum::read_csv(in);
  REQUIRE(table.header.size() == 2);
  CHECK(table.column("b0") == 1);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[1][0] == "2");
  CHECK(table.rows[1][1] == "0.25");
  CHECK_THROWS_AS(table.column("missing"), latsum::FormatError);
}

TEST_CASE("ragged rows rejected") {
  std::istringstream in("a,b\n1,2\n3\n");
  CHECK_THROWS_AS(latsum::read_csv(in), latsum::FormatError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(latsum::read_csv("/nonexistent/file.csv"), latsum::Error);
}
