#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>

namespace ineqcert {

/// Closed interval [lo, hi] of doubles.
///
/// Every operation returns an interval that contains the exact mathematical
/// image of its arguments. Infinite bounds may appear as evaluation results
/// (overflow) but are rejected as certification input by the certifier.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double point) : lo_(point), hi_(point) {}  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  static Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::fmin(a.lo_, b.lo_), std::fmax(a.hi_, b.hi_));
  }
  static Interval entire() {
    return Interval(-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
  }

  constexpr double lo() const { return lo_; }
  constexpr double hi() const { return hi_; }
  double width() const;  // rounded up
  double mid() const;
  double mag() const { return std::fmax(std::fabs(lo_), std::fabs(hi_)); }
  /// Smallest |x| over the interval.
  double mig() const;

  bool is_point() const { return lo_ == hi_; }
  bool is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool certainly_positive() const { return lo_ > 0.0; }
  bool certainly_negative() const { return hi_ < 0.0; }

  std::optional<Interval> intersect(const Interval& o) const;

  friend bool operator==(const Interval& a, const Interval& b) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator-(const Interval& a);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws PoleError when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

Interval pow_int(const Interval& a, int n);
Interval sqr(const Interval& a);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval sinh(const Interval& a);
Interval cosh(const Interval& a);
Interval tanh(const Interval& a);
/// exp(c * log(base)); base must be positive.
Interval pow_real(const Interval& base, const Interval& exponent);

std::ostream& operator<<(std::ostream& os, const Interval& a);
std::string to_string(const Interval& a);

/// Tight enclosures of pi and its multiples.
namespace constants {
inline constexpr double kPiLo = 0x1.921fb54442d18p+1;  // largest double below pi
inline constexpr double kPiHi = 0x1.921fb54442d19p+1;
inline constexpr double kHalfPiLo = 0x1.921fb54442d18p+0;
inline constexpr double kHalfPiHi = 0x1.921fb54442d19p+0;
inline const Interval kPi{kPiLo, kPiHi};
inline const Interval kHalfPi{kHalfPiLo, kHalfPiHi};
}  // namespace constants

/// Number of ulps added on each side of a libm transcendental result.
inline constexpr int kTranscendentalUlps = 3;

}  // namespace ineqcert
