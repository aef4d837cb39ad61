#include <doctest.h>

#include <sstream>

#include "latsum/errors.hpp"
#include "latsum/lattice.hpp"
#include "latsum/pade.hpp"

using latsum::BigFloat;
using latsum::FrobeniusSeries;
using latsum::Rational;

namespace {

FrobeniusSeries instanton_series(int order) {
  FrobeniusSeries s;
  s.coefficients.coefficients = latsum::generate_instanton(order).site_row(1);
  s.M = Rational(1, 2);
  return s;
}

double as_double(const BigFloat& x) { return std::stod(x.str(17)); }

}  // namespace

TEST_CASE("first approximants, closed form") {
  FrobeniusSeries s = instanton_series(4);
  // c_1 = -2 a_1 = 1 and c_2 = [x^2](1 - x/2 + x^2/8)^-4 = 2 by hand.
  auto r1 = latsum::strong_coupling_approximant(s, 1);
  CHECK(r1.c_N == Rational(1));
  CHECK(as_double(r1.S.re) == doctest::Approx(1.0));
  auto r2 = latsum::strong_coupling_approximant(s, 2);
  CHECK(r2.c_N == Rational(2));
  CHECK(as_double(r2.S.re) == doctest::Approx(0.8408964152537145).epsilon(1e-12));
}

TEST_CASE("exactness split: doubled precision changes S_N only at the tail") {
  FrobeniusSeries s = instanton_series(20);
  auto lo = latsum::strong_coupling_approximant(s, 17, 256);
  auto hi = latsum::strong_coupling_approximant(s, 17, 512);
  CHECK(lo.c_N == hi.c_N);
  BigFloat rel = abs((lo.S.re - hi.S.re) / hi.S.re);
  CHECK(rel < BigFloat::of(1.0) / pow_si(BigFloat::of(2.0), 100));
}

TEST_CASE("sweep annotations on the instanton problem") {
  FrobeniusSeries s = instanton_series(70);
  BigFloat ref = BigFloat::of(1L) / sqrt(BigFloat::of(2L));
  auto sweep = latsum::approximant_sweep(s, 70, ref);
  REQUIRE(sweep.annotations.argmin_real.has_value());
  CHECK(*sweep.annotations.argmin_real == 24);
  CHECK(as_double(*sweep.annotations.min_value) == doctest::Approx(0.70198319).epsilon(2e-7));
  // downward crossing at 13, upward at 41
  REQUIRE(sweep.annotations.crossings.size() >= 2);
  CHECK(sweep.annotations.crossings[0] == 13);
  CHECK(sweep.annotations.crossings[1] == 41);
  REQUIRE(sweep.annotations.complex_windows.size() == 1);
  CHECK(sweep.annotations.complex_windows[0].first == 52);
  CHECK(sweep.annotations.complex_windows[0].second == 68);
  CHECK(sweep.annotations.degenerate_orders.empty());
}

TEST_CASE("complex records carry a consistent magnitude") {
  FrobeniusSeries s = instanton_series(60);
  auto sweep = latsum::approximant_sweep(s, 60);
  bool saw_complex = false;
  for (const auto& rec : sweep.records) {
    if (!rec.is_real) {
      saw_complex = true;
      // |S|^(2N/M)... cheap sanity: imaginary part is nonzero and finite
      CHECK(!rec.S.im.is_zero());
    }
  }
  CHECK(saw_complex);
}

TEST_CASE("degenerate coefficient becomes a gap, not a failure") {
  FrobeniusSeries s;
  // u = 1 + x^2 (odd part vanishes): c_1^(1) = [x] u^(-1/M·1)... the order-1
  // coefficient of any power is 0, so N=1 is degenerate.
  s.coefficients.coefficients = {Rational(1), Rational(0), Rational(1), Rational(0)};
  s.M = Rational(1, 2);
  CHECK_THROWS_AS(latsum::strong_coupling_approximant(s, 1), latsum::DegenerateCoefficient);
  auto sweep = latsum::approximant_sweep(s, 3);
  REQUIRE(sweep.annotations.degenerate_orders.size() >= 1);
  CHECK(sweep.annotations.degenerate_orders[0] == 1);
  for (const auto& rec : sweep.records) CHECK(rec.N != 1);
}

TEST_CASE("sweep csv output") {
  FrobeniusSeries s = instanton_series(5);
  auto sweep = latsum::approximant_sweep(s, 5);
  std::ostringstream out;
  latsum::write_sweep_csv(sweep, out, "m.json");
  const std::string text = out.str();
  CHECK(text.find("# manifest: m.json") == 0);
  CHECK(text.find("N,c_N,re_S,im_S,is_real") != std::string::npos);
  CHECK(text.find("\n1,1/1,") != std::string::npos);
  CHECK(text.find("\n2,2/1,") != std::string::npos);
}
