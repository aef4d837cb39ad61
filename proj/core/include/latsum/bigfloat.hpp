#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "latsum/rational.hpp"

namespace latsum {

/// Binary floating value with a configurable mantissa (default 256 bits).
/// Binary operations round at the larger of the two operand precisions.
class BigFloat {
 public:
  static mpfr_prec_t default_precision();
  static void set_default_precision(mpfr_prec_t bits);

  explicit BigFloat(mpfr_prec_t prec = default_precision()) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(double x, mpfr_prec_t prec = default_precision());
  static BigFloat of(long x, mpfr_prec_t prec = default_precision());
  /// Correctly rounded at `prec`; safe for rationals of any size.
  static BigFloat of(const Rational& r, mpfr_prec_t prec = default_precision());
  static BigFloat parse(const std::string& s, mpfr_prec_t prec = default_precision());
  static BigFloat pi(mpfr_prec_t prec = default_precision());

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Shortest-faithful decimal with `digits` significant digits.
  std::string str(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat gamma(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& e);
BigFloat pow_si(const BigFloat& x, long e);
/// k-th root of a nonnegative value.
BigFloat rootn(const BigFloat& x, unsigned long k);

/// Complex value held as two BigFloats.  im is an exact zero iff the value
/// is real.
struct ComplexBigFloat {
  BigFloat re;
  BigFloat im;

  ComplexBigFloat() = default;
  ComplexBigFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexBigFloat(BigFloat r) : re(std::move(r)), im(BigFloat(re.precision())) {}

  bool is_real() const { return im.is_zero(); }
};

}  // namespace latsum
