#include <doctest.h>

#include <sstream>

#include "latsum/errors.hpp"
#include "latsum/richardson.hpp"

using latsum::BigFloat;
using latsum::SequenceData;

namespace {

double as_double(const BigFloat& x) { return std::stod(x.str(17)); }

SequenceData poly_tail(int terms, std::initializer_list<double> coeffs) {
  // A_n = 1 + sum_i c_i / n^(i+1)
  SequenceData seq;
  seq.n0 = 1;
  for (long n = 1; n <= terms; ++n) {
    BigFloat v = BigFloat::of(1.0);
    double power = static_cast<double>(n);
    for (double c : coeffs) {
      v = v + BigFloat::of(c) / BigFloat::of(power);
      power *= static_cast<double>(n);
    }
    seq.values.push_back(v);
  }
  return seq;
}

}  // namespace

TEST_CASE("order-k transform annihilates a 1/n..1/n^k tail exactly") {
  for (int k = 1; k <= 4; ++k) {
    SequenceData seq = poly_tail(12, {3.0, -2.0, 0.5, 7.0});
    // truncate the tail at 1/n^k so order k is exact
    SequenceData trunc;
    trunc.n0 = 1;
    std::initializer_list<double> cs = {3.0, -2.0, 0.5, 7.0};
    for (long n = 1; n <= 12; ++n) {
      BigFloat v = BigFloat::of(1.0);
      double power = static_cast<double>(n);
      int i = 0;
      for (double c : cs) {
        if (i++ >= k) break;
        v = v + BigFloat::of(c) / BigFloat::of(power);
        power *= static_cast<double>(n);
      }
      trunc.values.push_back(v);
    }
    auto r = latsum::richardson(trunc, k);
    for (const auto& v : r.values) {
      CHECK(as_double(abs(v - BigFloat::of(1.0))) < 1e-60);
    }
  }
}

TEST_CASE("transform is linear") {
  SequenceData a = poly_tail(10, {1.0, -4.0});
  SequenceData b = poly_tail(10, {-2.5, 3.0});
  SequenceData sum;
  sum.n0 = 1;
  for (std::size_t i = 0; i < a.values.size(); ++i) sum.values.push_back(a.values[i] + b.values[i]);
  auto ra = latsum::richardson(a, 3);
  auto rb = latsum::richardson(b, 3);
  auto rs = latsum::richardson(sum, 3);
  REQUIRE(rs.values.size() == ra.values.size());
  for (std::size_t i = 0; i < rs.values.size(); ++i) {
    CHECK(as_double(abs(rs.values[i] - (ra.values[i] + rb.values[i]))) < 1e-60);
  }
}

TEST_CASE("constant sequences are fixed points") {
  SequenceData seq;
  seq.n0 = 1;
  for (int i = 0; i < 8; ++i) seq.values.push_back(BigFloat::of(0.25));
  auto r = latsum::richardson(seq, 3);
  for (const auto& v : r.values) CHECK(as_double(abs(v - BigFloat::of(0.25))) < 1e-70);
}

TEST_CASE("insufficient data throws") {
  SequenceData seq;
  seq.n0 = 1;
  seq.values = {BigFloat::of(1.0), BigFloat::of(2.0)};
  CHECK_THROWS_AS(latsum::richardson(seq, 2), latsum::InsufficientData);
  CHECK_NOTHROW(latsum::richardson(seq, 1));
}

TEST_CASE("report flags and values") {
  SequenceData seq = poly_tail(30, {2.0});  // A_n = 1 + 2/n, decreasing
  auto report = latsum::richardson_report(seq, 2);
  REQUIRE(report.size() == 2);
  CHECK(report[0].k == 1);
  CHECK(as_double(abs(report[0].value - BigFloat::of(1.0))) < 1e-60);

  SequenceData constant;
  constant.n0 = 1;
  for (int i = 0; i < 30; ++i) constant.values.push_back(BigFloat::of(0.5));
  // an exactly constant window is flagged increasing by convention
  CHECK(latsum::richardson_report(constant, 1)[0].flag == "increasing");

  SequenceData dec;
  dec.n0 = 1;
  for (long n = 1; n <= 30; ++n) {
    // order-1 transform of 1 - 1/n^2 is 1 + 1/(n(n+1)): decreasing
    dec.values.push_back(BigFloat::of(1.0) - BigFloat::of(1.0) / BigFloat::of(static_cast<double>(n * n)));
  }
  auto rep2 = latsum::richardson_report(dec, 1);
  CHECK(rep2[0].flag == "decreasing");

  SequenceData osc;
  osc.n0 = 1;
  for (long n = 1; n <= 30; ++n) {
    double s = (n % 2 == 0) ? 1.0 : -1.0;
    osc.values.push_back(BigFloat::of(1.0 + s / static_cast<double>(n * n * n)));
  }
  auto rep3 = latsum::richardson_report(osc, 1);
  CHECK(rep3[0].flag == "oscillating");
}

TEST_CASE("report csv format") {
  SequenceData seq = poly_tail(12, {2.0});
  auto report = latsum::richardson_report(seq, 2);
  std::ostringstream out;
  latsum::write_report_csv(report, out, "m.json");
  CHECK(out.str().find("# manifest: m.json") == 0);
  CHECK(out.str().find("k,value,flag") != std::string::npos);
}
