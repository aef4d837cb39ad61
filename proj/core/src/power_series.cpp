#include "latsum/power_series.hpp"

#include <algorithm>

#include "latsum/errors.hpp"

namespace latsum {

PowerSeries PowerSeries::one(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  c[0] = Rational(1);
  return PowerSeries(std::move(c));
}

PowerSeries series_mul(const PowerSeries& u, const PowerSeries& v, int order) {
  if (order > std::min(u.order(), v.order())) {
    throw Error("series_mul: requested order exceeds input order");
  }
  std::vector<Rational> w(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int n = 0; n <= order; ++n) {
    Rational s(0);
    for (int k = 0; k <= n; ++k) {
      if (u[k].is_zero() || v[n - k].is_zero()) continue;
      s += u[k] * v[n - k];
    }
    w[static_cast<std::size_t>(n)] = std::move(s);
  }
  return PowerSeries(std::move(w));
}

PowerSeries series_pow(const PowerSeries& u, const Rational& alpha, int order) {
  if (u.order() < 0 || u[0] != Rational(1)) {
    throw NonUnitLeadingCoefficient("series_pow: constant term must be 1");
  }
  if (order > u.order()) {
    throw Error("series_pow: requested order exceeds input order");
  }
  std::vector<Rational> w(static_cast<std::size_t>(order) + 1, Rational(0));
  w[0] = Rational(1);
  const Rational ap1 = alpha + Rational(1);
  for (int n = 1; n <= order; ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k) {
      if (u[k].is_zero() || w[static_cast<std::size_t>(n - k)].is_zero()) continue;
      s += (ap1 * Rational(k) - Rational(n)) * u[k] * w[static_cast<std::size_t>(n - k)];
    }
    w[static_cast<std::size_t>(n)] = s / Rational(n);
  }
  return PowerSeries(std::move(w));
}

Rational gen_binomial(const Rational& alpha, unsigned long k) {
  Rational p(1);
  for (unsigned long i = 0; i < k; ++i) {
    p *= alpha - Rational(static_cast<long>(i));
  }
  return p / factorial(k);
}

ComplexBigFloat principal_power(const Rational& c, const Rational& e, mpfr_prec_t prec) {
  if (c.is_zero()) throw ZeroBase("principal_power: zero base");
  // |c|^e = exp(e ln|c|); mpfr carries huge exponents, so rationals with
  // million-digit numerators stay finite through set_q and log.
  const BigFloat ln_abs = log(BigFloat::of(c.abs(), prec));
  const BigFloat magnitude = exp(BigFloat::of(e, prec) * ln_abs);
  if (c.sign() > 0) {
    return ComplexBigFloat(magnitude);
  }
  if (e.denominator() == 1) {  // integer exponent: exactly real
    const bool odd = mpz_odd_p(e.numerator().get_mpz_t()) != 0;
    return ComplexBigFloat(odd ? -magnitude : magnitude);
  }
  const BigFloat angle = BigFloat::of(e, prec) * BigFloat::pi(prec);
  return ComplexBigFloat(magnitude * cos(angle), magnitude * sin(angle));
}

}  // namespace latsum
