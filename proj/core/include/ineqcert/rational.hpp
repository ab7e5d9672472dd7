#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace ineqcert {

/// Exact fraction in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
/// and GMP keeps results of arithmetic canonical.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  std::string numerator_string() const { return q_.get_num().get_str(); }
  std::string denominator_string() const { return q_.get_den().get_str(); }
  std::string str() const { return q_.get_str(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const { return Rational(::abs(q_)); }

  /// Nearest double (round-to-nearest); not a rigorous bound.
  double to_double() const { return q_.get_d(); }
  /// Largest double <= value and smallest double >= value.
  double lower_double() const;
  double upper_double() const;

  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

Rational pow(const Rational& base, unsigned exponent);
mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace ineqcert
