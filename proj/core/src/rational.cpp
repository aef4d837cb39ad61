#include "latsum/rational.hpp"

#include <cctype>
#include <ostream>

#include "latsum/errors.hpp"

namespace latsum {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw FormatError("Rational: zero denominator");
  canonicalize();
}

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-') {
    throw FormatError("Rational: malformed value '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0) {
    throw FormatError("Rational: malformed value '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw FormatError("Rational: zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("Rational: reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = (e > 0) ? *this : reciprocal();
  const unsigned long k = (e > 0) ? static_cast<unsigned long>(e)
                                  : static_cast<unsigned long>(-e);
  mpq_class r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.q_.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.q_.get_mpq_t()), k);
  return Rational(std::move(r));  // inputs reduced, so the power is reduced
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational factorial(unsigned long j) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), j);
  return Rational(mpq_class(f));
}

}  // namespace latsum
