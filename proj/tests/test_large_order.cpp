#include <doctest.h>

#include <cmath>

#include "latsum/errors.hpp"
#include "latsum/large_order.hpp"
#include "latsum/lattice.hpp"

using latsum::BigFloat;
using latsum::CoefficientSequence;
using latsum::Rational;

namespace {

double as_double(const BigFloat& x) { return std::stod(x.str(17)); }

// a_j = s^j K^j j^A with integer A so the values stay rational
CoefficientSequence synthetic(long j0, long terms, long K, long A, bool alternating) {
  CoefficientSequence row;
  row.j0 = j0;
  for (long j = j0; j < j0 + terms; ++j) {
    Rational v = Rational(K).pow_int(j) * Rational(j).pow_int(A);
    if (alternating && j % 2 != 0) v = -v;
    row.values.push_back(v);
  }
  return row;
}

}  // namespace

TEST_CASE("estimators are exact on the pure power-law form") {
  CoefficientSequence row = synthetic(3, 12, 2, -2, true);
  auto A = latsum::estimate_A(row);
  CHECK(A.gaps.empty());
  for (const auto& v : A.seq.values) CHECK(as_double(v) == doctest::Approx(-2.0).epsilon(1e-50));
  auto K = latsum::estimate_K(row, BigFloat::of(-2.0));
  for (const auto& v : K.seq.values) CHECK(as_double(v) == doctest::Approx(2.0).epsilon(1e-50));
  auto B = latsum::estimate_B(row, BigFloat::of(2.0), BigFloat::of(-2.0));
  for (const auto& v : B.seq.values) CHECK(as_double(v) == doctest::Approx(1.0).epsilon(1e-50));
}

TEST_CASE("zero coefficients produce gaps and a contiguous tail") {
  CoefficientSequence row = synthetic(1, 10, 2, -1, false);
  row.values[3] = Rational(0);  // j = 4
  auto A = latsum::estimate_A(row);
  REQUIRE(!A.gaps.empty());
  // estimates referencing j = 4 are skipped; remaining sequence starts after
  CHECK(A.seq.n0 > 2);
  for (const auto& v : A.seq.values) CHECK(as_double(v) == doctest::Approx(-1.0).epsilon(1e-40));
  auto K = latsum::estimate_K(row, BigFloat::of(-1.0));
  CHECK(!K.gaps.empty());
  CHECK(K.seq.n0 > 3);
}

TEST_CASE("instanton growth parameters at moderate order") {
  auto table = latsum::generate_instanton(60);
  CoefficientSequence row;
  row.j0 = 4;
  for (long j = 4; j <= 60; ++j) row.values.push_back(table.at(1, static_cast<int>(j)));
  auto A = latsum::estimate_A(row);
  // raw estimates converge slowly (~1/j); a low-order Richardson pass closes in
  auto a_rep = latsum::richardson_report(A.seq, 2);
  CHECK(as_double(a_rep.back().value) == doctest::Approx(-1.5).epsilon(0.002));
  auto K = latsum::estimate_K(row, BigFloat::of(-1.5));
  auto k_rep = latsum::richardson_report(K.seq, 2);
  CHECK(as_double(k_rep.back().value) == doctest::Approx(2.46682906).epsilon(0.0001));
}

TEST_CASE("sign_score counts agreements") {
  CoefficientSequence row;
  row.j0 = 1;
  for (long j = 1; j <= 40; ++j) {
    double c = std::cos(0.9 * static_cast<double>(j) + 0.4);
    row.values.push_back(c >= 0 ? Rational(1) : Rational(-1));
  }
  auto fit = latsum::sign_score(row, 0.9, 0.4);
  CHECK(fit.score == 40);
  CHECK(fit.mismatches.empty());
  // flipping the phase by pi flips every sign
  auto anti = latsum::sign_score(row, 0.9, 0.4 + 3.14159265358979);
  CHECK(anti.score == -40);
}

TEST_CASE("sign_score guards") {
  CoefficientSequence zero;
  zero.j0 = 1;
  zero.values = {Rational(1), Rational(0)};
  CHECK_THROWS_AS(latsum::sign_score(zero, 0.3, 0.1), latsum::ZeroCoefficient);
  CoefficientSequence row;
  row.j0 = 1;
  row.values = {Rational(1), Rational(1)};
  // cos(a·1 + b) = 0 exactly at a+b = pi/2
  CHECK_THROWS_AS(latsum::sign_score(row, 1.0, 1.5707963267948966 - 1.0), latsum::AmbiguousPhase);
}

TEST_CASE("grid search recovers a planted sign pattern") {
  CoefficientSequence row;
  row.j0 = 1;
  const double a0 = 1.3941, b0 = 3.09;
  for (long j = 1; j <= 120; ++j) {
    double c = std::cos(a0 * static_cast<double>(j) + b0);
    // plant magnitude growth so signs carry all the information
    row.values.push_back(c >= 0 ? Rational(j) : -Rational(j));
  }
  latsum::GridSearchConfig config;
  config.resolution = 400;
  config.refine_depth = 2;
  auto fits = latsum::sign_grid_search(row, 1.0, 2.0, 2.8, 3.3, config);
  REQUIRE(!fits.empty());
  bool found = false;
  for (const auto& f : fits) {
    if (f.score == 120 && std::abs(f.a - a0) < 0.01) found = true;
  }
  CHECK(found);
}

TEST_CASE("pure cosine restricts the phase") {
  CoefficientSequence row;
  row.j0 = 1;
  for (long j = 1; j <= 80; ++j) {
    double c = std::cos(0.77 * static_cast<double>(j));
    row.values.push_back(c >= 0 ? Rational(1) : Rational(-1));
  }
  auto fit = latsum::best_pure_cosine(row, 0.5, 1.0);
  CHECK((std::abs(fit.b) < 1e-9 || std::abs(fit.b - 3.14159265358979) < 1e-9));
  CHECK(std::abs(fit.a - 0.77) < 0.005);
  CHECK(fit.score == 80);
}

TEST_CASE("normalize_row") {
  CoefficientSequence row;
  row.j0 = 1;
  row.values = {Rational(-2), Rational(2), Rational(8, 3)};
  auto norm = latsum::normalize_row(row, 1.3941, 3.09);
  REQUIRE(norm.aprime.size() == 3);
  CHECK(as_double(norm.aprime[0]) == doctest::Approx(-2.0 / std::cos(1.3941 + 3.09)).epsilon(1e-10));
  CHECK(as_double(norm.bnorm[1]) ==
        doctest::Approx(2.0 / std::cos(2 * 1.3941 + 3.09) / 2.0).epsilon(1e-10));
}

TEST_CASE("zeta via Euler-Maclaurin") {
  BigFloat z32 = latsum::zeta(BigFloat::of(1.5));
  double v = as_double(z32);
  CHECK(v > 2.6123753);
  CHECK(v < 2.6123754);
  CHECK(as_double(latsum::zeta(BigFloat::of(2.0))) == doctest::Approx(1.6449340668482264).epsilon(1e-12));
  CHECK(as_double(latsum::zeta(BigFloat::of(4.0))) == doctest::Approx(1.0823232337111382).epsilon(1e-12));
}

TEST_CASE("zeta consistency prediction") {
  BigFloat K = latsum::zeta_consistency_K(BigFloat::of(0.0171), BigFloat::of(0.1190));
  CHECK(as_double(K) == doctest::Approx(3.940).epsilon(3e-4));
  CHECK_THROWS_AS(latsum::zeta_consistency_K(BigFloat::of(-1.0), BigFloat::of(0.1)),
                  latsum::NonPositiveB1);
}

TEST_CASE("convolution sums approach their limits monotonically in j") {
  using latsum::ConvolutionVariant;
  SUBCASE("zeta regime A < -1") {
    BigFloat A = BigFloat::of(-1.5);
    BigFloat limit = latsum::convolution_limit(A, ConvolutionVariant::Single);
    CHECK(as_double(limit) == doctest::Approx(2 * 2.612375348685488).epsilon(1e-9));
    double prev_err = 1e9;
    for (long j : {8L, 16L, 32L, 64L}) {
      double err = std::abs(as_double(latsum::convolution_sum(A, ConvolutionVariant::Single, j)) -
                            as_double(limit));
      CHECK(err < prev_err);
      prev_err = err;
    }
    BigFloat dlimit = latsum::convolution_limit(A, ConvolutionVariant::Double);
    CHECK(as_double(dlimit) == doctest::Approx(3 * 2.612375348685488 * 2.612375348685488).epsilon(1e-9));
  }
  SUBCASE("integral regime A > -1") {
    BigFloat A = BigFloat::of(0.0);
    // Gamma^2(1)/Gamma(2) = 1 exactly
    CHECK(as_double(latsum::convolution_limit(A, ConvolutionVariant::Single)) == doctest::Approx(1.0));
    BigFloat Ah = BigFloat::of(-0.5);
    BigFloat limit = latsum::convolution_limit(Ah, ConvolutionVariant::Single);
    // Gamma^2(1/2)/Gamma(1) = pi
    CHECK(as_double(limit) == doctest::Approx(3.141592653589793).epsilon(1e-12));
    double prev_err = 1e9;
    for (long j : {16L, 64L, 256L}) {
      double err = std::abs(as_double(latsum::convolution_sum(Ah, ConvolutionVariant::Single, j)) -
                            as_double(limit));
      CHECK(err < prev_err);
      prev_err = err;
    }
  }
}
