#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace latsum {

/// Arbitrary-precision rational, always reduced, denominator > 0.
/// Serializes as "numerator/denominator" with the sign on the numerator.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }
  explicit Rational(mpq_class&& q) : q_(std::move(q)) { canonicalize(); }

  /// Parses "num/den" or a bare integer. Non-reduced input is normalized.
  /// Throws FormatError on malformed input or zero denominator.
  static Rational parse(const std::string& s);

  std::string str() const;  // always "num/den", e.g. "-23/128", "0/1"

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational reciprocal() const;

  /// Integer power, negative exponents allowed (base must be nonzero then).
  Rational pow_int(long e) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void canonicalize() { q_.canonicalize(); }
  mpq_class q_;
};

/// j! as a Rational.
Rational factorial(unsigned long j);

}  // namespace latsum
