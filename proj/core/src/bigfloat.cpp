#include "latsum/bigfloat.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <vector>

#include "latsum/errors.hpp"

namespace latsum {

namespace {
std::atomic<mpfr_prec_t> g_default_prec{256};

mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

mpfr_prec_t BigFloat::default_precision() { return g_default_prec.load(); }

void BigFloat::set_default_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN) throw Error("BigFloat: precision too small");
  g_default_prec.store(bits);
}

BigFloat BigFloat::of(double x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(long x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Rational& r, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_set_q(x.v_, r.raw().get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::parse(const std::string& s, mpfr_prec_t prec) {
  BigFloat x(prec);
  if (mpfr_set_str(x.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw FormatError("BigFloat: malformed value '" + s + "'");
  }
  return x;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

#define LATSUM_UNARY(name, fn)                  \
  BigFloat name(const BigFloat& x) {            \
    BigFloat r(x.precision());                  \
    fn(r.get(), x.get(), MPFR_RNDN);            \
    return r;                                   \
  }

LATSUM_UNARY(abs, mpfr_abs)
LATSUM_UNARY(sqrt, mpfr_sqrt)
LATSUM_UNARY(exp, mpfr_exp)
LATSUM_UNARY(log, mpfr_log)
LATSUM_UNARY(cos, mpfr_cos)
LATSUM_UNARY(sin, mpfr_sin)
LATSUM_UNARY(gamma, mpfr_gamma)

#undef LATSUM_UNARY

BigFloat pow(const BigFloat& x, const BigFloat& e) {
  BigFloat r(max_prec(x, e));
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

BigFloat pow_si(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat rootn(const BigFloat& x, unsigned long k) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

}  // namespace latsum
