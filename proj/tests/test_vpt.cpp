#include <doctest.h>

#include <cmath>

#include "latsum/errors.hpp"
#include "latsum/lattice.hpp"
#include "latsum/vpt.hpp"

using latsum::BigFloat;
using latsum::Rational;
using latsum::VptProblem;
using latsum::VptStrategy;

namespace {

VptProblem instanton_problem(int order) {
  VptProblem p;
  p.f = latsum::generate_instanton(order).site_row(1);
  p.p = -1;
  p.q = 2;
  return p;
}

double as_double(const BigFloat& x) { return std::stod(x.str(17)); }

}  // namespace

TEST_CASE("order one by hand") {
  VptProblem p = instanton_problem(1);
  // b0^(1)(k) = 3/(2k) - 1/(2k^3): value 1 at k=1, extremum exactly there,
  // inflection at k = sqrt(2).
  CHECK(as_double(latsum::vpt_b0(p, 1, BigFloat::of(1.0))) == doctest::Approx(1.0));
  CHECK(as_double(latsum::first_order_k0(p)) == doctest::Approx(1.0));
  auto ext = latsum::optimal_k0(p, 1, VptStrategy::Extremum);
  CHECK(as_double(ext.k0) == doctest::Approx(1.0).epsilon(1e-14));
  auto inf = latsum::optimal_k0(p, 1, VptStrategy::RightmostInflection);
  CHECK(as_double(inf.k0) == doctest::Approx(1.4142135623730951).epsilon(1e-14));
}

TEST_CASE("derivative matches finite differences") {
  VptProblem p = instanton_problem(12);
  const BigFloat k0 = BigFloat::of(3.7);
  const BigFloat h = BigFloat::of(1.0) / pow_si(BigFloat::of(2.0), 64);  // ~5e-20
  for (int d = 1; d <= 2; ++d) {
    BigFloat exact = latsum::vpt_b0_deriv(p, 12, k0, d);
    BigFloat fd;
    if (d == 1) {
      fd = (latsum::vpt_b0(p, 12, k0 + h) - latsum::vpt_b0(p, 12, k0 - h)) / (BigFloat::of(2.0) * h);
    } else {
      fd = (latsum::vpt_b0_deriv(p, 12, k0 + h, 1) - latsum::vpt_b0_deriv(p, 12, k0 - h, 1)) /
           (BigFloat::of(2.0) * h);
    }
    CHECK(as_double(abs(exact - fd)) < 1e-20);
  }
}

TEST_CASE("derivative polynomial reduces to the analytic derivative") {
  // d-th derivative times k0^(Nq - p + d) equals the exact polynomial in u = k0^q.
  VptProblem p = instanton_problem(9);
  const int N = 9;
  const BigFloat k0 = BigFloat::of(2.31);
  for (int d = 1; d <= 2; ++d) {
    auto poly = latsum::vpt_derivative_polynomial(p, N, d);
    REQUIRE(poly.size() == static_cast<std::size_t>(N) + 1);
    BigFloat u = pow_si(k0, p.q);
    BigFloat acc = BigFloat::of(0.0);
    BigFloat upow = BigFloat::of(1.0);
    for (const Rational& c : poly) {
      acc = acc + BigFloat::of(c) * upow;
      upow = upow * u;
    }
    BigFloat direct = latsum::vpt_b0_deriv(p, N, k0, d) * pow_si(k0, N * p.q - p.p + d);
    CHECK(as_double(abs(acc - direct)) < 1e-40);
  }
}

TEST_CASE("optimal_k0 roots are certified") {
  VptProblem p = instanton_problem(20);
  for (auto strategy : {VptStrategy::Extremum, VptStrategy::RightmostInflection}) {
    auto res = latsum::optimal_k0(p, 20, strategy);
    CHECK(res.k0 > BigFloat::of(0.0));
    const int d = strategy == VptStrategy::Extremum ? 1 : 2;
    // the selected derivative really vanishes at k0
    CHECK(as_double(abs(latsum::vpt_b0_deriv(p, 20, res.k0, d))) < 1e-55);
    // k0 is the largest candidate
    for (const auto& c : res.candidates) CHECK(c <= res.k0 + BigFloat::of(1e-50));
  }
}

TEST_CASE("known instanton optima") {
  VptProblem p = instanton_problem(30);
  auto r10 = latsum::optimal_k0(p, 10, VptStrategy::RightmostInflection);
  CHECK(as_double(r10.b0) == doctest::Approx(0.726506303651).epsilon(1e-10));
  auto r30 = latsum::optimal_k0(p, 30, VptStrategy::RightmostInflection);
  CHECK(as_double(r30.b0) == doctest::Approx(0.713159735909).epsilon(1e-10));
}

TEST_CASE("no positive root is a NoRoot error and a sequence gap") {
  VptProblem p;
  // positive f1 makes b0^(1) = 3/(2k) + 1/(2k^3) strictly monotone and convex
  p.f = {Rational(1), Rational(1, 2)};
  p.p = -1;
  p.q = 2;
  CHECK_THROWS_AS(latsum::optimal_k0(p, 1, VptStrategy::RightmostInflection), latsum::NoRoot);
  auto seq = latsum::vpt_sequence(p, 1, VptStrategy::RightmostInflection);
  CHECK(seq.results.empty());
  REQUIRE(seq.gaps.size() == 1);
  CHECK(seq.gaps[0].first == 1);
}

TEST_CASE("first_order_k0 guards") {
  VptProblem p;
  p.p = -1;
  p.q = 2;
  p.f = {Rational(1), Rational(1, 2)};  // radicand negative
  CHECK_THROWS_AS(latsum::first_order_k0(p), latsum::NegativeRadicand);
  p.f = {Rational(0), Rational(-1, 2)};  // f0 = 0 -> division by zero in the formula
  CHECK_THROWS_AS(latsum::first_order_k0(p), latsum::Error);
  VptProblem sing;
  sing.p = 2;  // p(p-2) = 0
  sing.q = 1;
  sing.f = {Rational(1), Rational(-1)};
  CHECK_THROWS_AS(latsum::first_order_k0(sing), latsum::SingularFormula);
}

TEST_CASE("blasius first order") {
  VptProblem p;
  p.f = {Rational(1), Rational(-2)};
  p.p = -2;
  p.q = 4;
  // b0^(1)(k) = 2/k^2 - 2/k^6 (after the binomial weights); extremum at 3^(1/4)
  auto res = latsum::optimal_k0(p, 1, VptStrategy::Extremum);
  CHECK(as_double(res.k0) == doctest::Approx(1.3160740129524924).epsilon(1e-12));
  // flat point uses the q-th derivative: 240/k^6 - 6048/k^10 vanishes at k^4 = 126/5
  auto flat = latsum::optimal_k0(p, 1, VptStrategy::RightmostInflection);
  CHECK(as_double(flat.k0) == doctest::Approx(std::pow(25.2, 0.25)).epsilon(1e-12));
  double k2 = std::sqrt(25.2);
  CHECK(as_double(flat.b0) == doctest::Approx(2 / k2 - 2 / (k2 * k2 * k2)).epsilon(1e-12));
}
