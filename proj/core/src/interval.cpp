#include "ineqcert/interval.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

#include "ineqcert/errors.hpp"
#include "ineqcert/rounding.hpp"

namespace ineqcert {

namespace r = rounding;

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("interval bound is NaN");
  if (lo > hi) throw DomainError("interval with lo > hi: [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

double Interval::width() const { return r::sub(hi_, lo_).hi; }

double Interval::mid() const {
  if (lo_ == -hi_) return 0.0;
  const double m = lo_ + 0.5 * (hi_ - lo_);
  if (std::isfinite(m)) return std::clamp(m, lo_, hi_);
  return 0.5 * lo_ + 0.5 * hi_;
}

double Interval::mig() const {
  if (contains_zero()) return 0.0;
  return std::fmin(std::fabs(lo_), std::fabs(hi_));
}

std::optional<Interval> Interval::intersect(const Interval& o) const {
  const double lo = std::fmax(lo_, o.lo_);
  const double hi = std::fmin(hi_, o.hi_);
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(r::add(a.lo(), b.lo()).lo, r::add(a.hi(), b.hi()).hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(r::sub(a.lo(), b.hi()).lo, r::sub(a.hi(), b.lo()).hi);
}

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<r::Bounds, 4> p = {r::mul(a.lo(), b.lo()), r::mul(a.lo(), b.hi()),
                                      r::mul(a.hi(), b.lo()), r::mul(a.hi(), b.hi())};
  double lo = p[0].lo;
  double hi = p[0].hi;
  for (const auto& q : p) {
    lo = std::fmin(lo, q.lo);
    hi = std::fmax(hi, q.hi);
  }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw PoleError("division by an interval containing zero: " + to_string(b));
  const std::array<r::Bounds, 4> p = {r::div(a.lo(), b.lo()), r::div(a.lo(), b.hi()),
                                      r::div(a.hi(), b.lo()), r::div(a.hi(), b.hi())};
  double lo = p[0].lo;
  double hi = p[0].hi;
  for (const auto& q : p) {
    lo = std::fmin(lo, q.lo);
    hi = std::fmax(hi, q.hi);
  }
  return Interval(lo, hi);
}

namespace {

// Power of a nonnegative interval by repeated squaring with directed bounds.
Interval pow_nonneg(const Interval& a, unsigned n) {
  Interval result(1.0);
  Interval base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  // Products of nonnegative intervals may carry a -0 or a nudged negative lo.
  return Interval(std::fmax(result.lo(), 0.0), result.hi());
}

Interval widen(double value, int ulps) {
  return Interval(r::nudge_down(value, ulps), r::nudge_up(value, ulps));
}

}  // namespace

Interval sqr(const Interval& a) { return pow_int(a, 2); }

Interval pow_int(const Interval& a, int n) {
  if (n == 0) return Interval(1.0);
  if (n < 0) return Interval(1.0) / pow_int(a, -n);
  const auto un = static_cast<unsigned>(n);
  if (a.lo() >= 0) return pow_nonneg(a, un);
  if (a.hi() <= 0) {
    const Interval p = pow_nonneg(-a, un);
    return (un % 2 == 0) ? p : -p;
  }
  // Straddles zero.
  if (un % 2 == 0) {
    const Interval m = pow_nonneg(Interval(0.0, a.mag()), un);
    return Interval(0.0, m.hi());
  }
  const Interval neg = pow_nonneg(Interval(0.0, -a.lo()), un);
  const Interval pos = pow_nonneg(Interval(0.0, a.hi()), un);
  return Interval(-neg.hi(), pos.hi());
}

Interval abs(const Interval& a) {
  if (a.lo() >= 0) return a;
  if (a.hi() <= 0) return -a;
  return Interval(0.0, a.mag());
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0) throw DomainError("sqrt of an interval with negative part: " + to_string(a));
  return Interval(r::sqrt(a.lo()).lo, r::sqrt(a.hi()).hi);
}

Interval exp(const Interval& a) {
  auto lower = [](double x) {
    if (x == 0) return 1.0;
    if (x == -HUGE_VAL) return 0.0;
    return std::fmax(r::nudge_down(std::exp(x), kTranscendentalUlps), 0.0);
  };
  auto upper = [](double x) {
    if (x == 0) return 1.0;
    if (x == -HUGE_VAL) return 0.0;
    const double v = std::exp(x);
    return v == 0 ? std::numeric_limits<double>::denorm_min() : r::nudge_up(v, kTranscendentalUlps);
  };
  return Interval(lower(a.lo()), upper(a.hi()));
}

Interval log(const Interval& a) {
  if (a.lo() <= 0) throw DomainError("log of an interval not bounded away from zero: " + to_string(a));
  auto bound = [](double x, bool up) {
    if (x == 1.0) return 0.0;
    const double v = std::log(x);
    return up ? r::nudge_up(v, kTranscendentalUlps) : r::nudge_down(v, kTranscendentalUlps);
  };
  return Interval(bound(a.lo(), false), bound(a.hi(), true));
}

namespace {

// Bound of a monotone increasing libm function evaluated at each endpoint.
template <class F>
Interval monotone_increasing(const Interval& a, F f, double fixed_zero_value) {
  auto at = [&](double x, bool up) {
    if (x == 0) return fixed_zero_value;
    const double v = f(x);
    return up ? r::nudge_up(v, kTranscendentalUlps) : r::nudge_down(v, kTranscendentalUlps);
  };
  return Interval(at(a.lo(), false), at(a.hi(), true));
}

// Range of a periodic function with extrema at (offset + j) * pi.
// value_at_extremum(j) gives the extremal value (+-1) at index j.
template <class F, class V>
Interval trig_range(const Interval& a, F f, double phase_half_pi_units, V value_at_extremum) {
  if (!a.is_finite() || a.width() >= 2 * constants::kPiLo || a.mag() > 1e8) return Interval(-1.0, 1.0);
  auto point = [&](double x) {
    const double v = f(x);
    return widen(v, kTranscendentalUlps);
  };
  Interval out = Interval::hull(point(a.lo()), point(a.hi()));
  // Candidate extrema: (j + phase) * pi, with phase in {0, 1/2}.
  const double jlo = std::floor(a.lo() / constants::kPiLo) - 2;
  const double jhi = std::ceil(a.hi() / constants::kPiLo) + 2;
  for (double j = jlo; j <= jhi; j += 1) {
    const Interval loc = (Interval(j) + Interval(phase_half_pi_units * 0.5)) * constants::kPi;
    if (loc.overlaps(a)) {
      const double v = value_at_extremum(static_cast<long long>(j));
      out = Interval::hull(out, Interval(v));
    }
  }
  return Interval(std::fmax(out.lo(), -1.0), std::fmin(out.hi(), 1.0));
}

}  // namespace

Interval sin(const Interval& a) {
  if (a == Interval(0.0)) return Interval(0.0);
  // maxima at pi/2 + 2k pi, minima at -pi/2 + 2k pi: extremum (j + 1/2) pi has value (-1)^j
  return trig_range(a, [](double x) { return std::sin(x); }, 1.0,
                    [](long long j) { return (j % 2 == 0) ? 1.0 : -1.0; });
}

Interval cos(const Interval& a) {
  if (a == Interval(0.0)) return Interval(1.0);
  // extremum j*pi has value (-1)^j
  return trig_range(a, [](double x) { return std::cos(x); }, 0.0,
                    [](long long j) { return (j % 2 == 0) ? 1.0 : -1.0; });
}

Interval sinh(const Interval& a) {
  return monotone_increasing(a, [](double x) { return std::sinh(x); }, 0.0);
}

Interval tanh(const Interval& a) {
  const Interval t = monotone_increasing(a, [](double x) { return std::tanh(x); }, 0.0);
  return Interval(std::fmax(t.lo(), -1.0), std::fmin(t.hi(), 1.0));
}

Interval cosh(const Interval& a) {
  const Interval m = abs(a);
  auto at = [](double x, bool up) {
    if (x == 0) return 1.0;
    const double v = std::cosh(x);
    return up ? r::nudge_up(v, kTranscendentalUlps) : std::fmax(r::nudge_down(v, kTranscendentalUlps), 1.0);
  };
  return Interval(at(m.lo(), false), at(m.hi(), true));
}

Interval pow_real(const Interval& base, const Interval& exponent) {
  // 0^p = 0 for p > 0; the supremum over (0, hi] is attained at hi.
  if (base.lo() == 0 && base.hi() > 0 && exponent.lo() > 0) {
    return Interval(0.0, exp(exponent * log(Interval(base.hi()))).hi());
  }
  if (base.lo() <= 0) throw DomainError("real power of a base not provably positive: " + to_string(base));
  return exp(exponent * log(base));
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

std::string to_string(const Interval& a) {
  std::array<char, 64> lo{};
  std::array<char, 64> hi{};
  auto rl = std::to_chars(lo.data(), lo.data() + lo.size(), a.lo());
  auto rh = std::to_chars(hi.data(), hi.data() + hi.size(), a.hi());
  return "[" + std::string(lo.data(), rl.ptr) + ", " + std::string(hi.data(), rh.ptr) + "]";
}

}  // namespace ineqcert
