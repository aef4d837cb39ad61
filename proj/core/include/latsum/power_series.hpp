#pragma once

#include <vector>

#include "latsum/bigfloat.hpp"
#include "latsum/rational.hpp"

namespace latsum {

/// Truncated formal power series in one variable with exact rational
/// coefficients.  coefficients[k] multiplies the k-th power; the retained
/// order is coefficients.size()-1.
struct PowerSeries {
  std::vector<Rational> coefficients;

  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> c) : coefficients(std::move(c)) {}
  static PowerSeries one(int order);

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  const Rational& operator[](int k) const { return coefficients[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coefficients[static_cast<std::size_t>(k)]; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coefficients == b.coefficients;
  }
};

/// Cauchy product truncated at `order`.  Requires order <= min of the input
/// orders.
PowerSeries series_mul(const PowerSeries& u, const PowerSeries& v, int order);

/// u^alpha for a series with constant term 1, through `order`, via the
/// logarithmic-derivative recurrence
///   n w_n = sum_{k=1..n} ((alpha+1) k - n) u_k w_{n-k},  w_0 = 1.
/// Throws NonUnitLeadingCoefficient if u[0] != 1.
PowerSeries series_pow(const PowerSeries& u, const Rational& alpha, int order);

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!.
Rational gen_binomial(const Rational& alpha, unsigned long k);

/// c^e on the principal branch: for c < 0, log c = ln|c| + i pi.  Exact for
/// the realness flag: the result is real iff c > 0 or e is an integer.
/// Throws ZeroBase if c == 0.
ComplexBigFloat principal_power(const Rational& c, const Rational& e,
                                mpfr_prec_t prec = BigFloat::default_precision());

}  // namespace latsum
