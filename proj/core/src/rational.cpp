#include "ineqcert/rational.hpp"

#include <cmath>

#include "ineqcert/errors.hpp"

namespace ineqcert {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

double Rational::lower_double() const {
  double d = q_.get_d();  // truncates toward zero
  if (!std::isfinite(d)) return d;
  // Walk to the correct side; get_d is within one ulp.
  while (cmp(mpq_class(d), q_) > 0) d = std::nextafter(d, -HUGE_VAL);
  return d;
}

double Rational::upper_double() const {
  double d = q_.get_d();
  if (!std::isfinite(d)) return d;
  while (cmp(mpq_class(d), q_) < 0) d = std::nextafter(d, HUGE_VAL);
  return d;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ineqcert
