#include "ineqcert/primitives.hpp"

#include <array>
#include <string>

#include "ineqcert/errors.hpp"
#include "ineqcert/series.hpp"

namespace ineqcert {

namespace {

constexpr int kStoredTerms = 40;
// sinc' is decreasing on [0, x*] with x* ~ 2.08 (first zero of sinc'').
constexpr double kDsincMonotoneLimit = 2.0;

struct SeriesSet {
  EvenSeries xcsc = series("xcsc", kStoredTerms);
  EvenSeries xcot = series("xcot", kStoredTerms);
  EvenSeries inv_sin2 = series("inv_sin2", kStoredTerms);
  EvenSeries sinhc = series("sinhc", kStoredTerms);
  EvenSeries xcoth = series("xcoth_aux", kStoredTerms);
  EvenSeries inv_sinh2 = series("inv_sinh2", kStoredTerms);
  EvenSeries dsinc = series("dsinc_aux", kStoredTerms);
  EvenSeries dsinhc = series("dsinhc_aux", kStoredTerms);
  EvenSeries d2sinc = series("d2sinc_aux", kStoredTerms);
  EvenSeries d2sinhc = series("d2sinhc_aux", kStoredTerms);
};

const SeriesSet& stored() {
  static const SeriesSet s;
  return s;
}

constexpr std::array<std::pair<Primitive, std::string_view>, 10> kNames = {{
    {Primitive::kSinc, "sinc"},
    {Primitive::kXcot, "xcot"},
    {Primitive::kSinhc, "sinhc"},
    {Primitive::kXcoth, "xcoth"},
    {Primitive::kInvSinc2, "inv_sinc2"},
    {Primitive::kInvSinhc2, "inv_sinhc2"},
    {Primitive::kDsinc, "dsinc"},
    {Primitive::kDsinhc, "dsinhc"},
    {Primitive::kD2sinc, "d2sinc"},
    {Primitive::kD2sinhc, "d2sinhc"},
}};

bool requires_circular_domain(Primitive fn) { return fn == Primitive::kXcot || fn == Primitive::kInvSinc2; }

bool is_odd(Primitive fn) { return fn == Primitive::kDsinc || fn == Primitive::kDsinhc; }

// Enclosure at a single nonnegative point, choosing the branch by magnitude.
Interval at_point(Primitive fn, double x, const PrimitiveOptions& opts) {
  const Interval p(x);
  if (x <= opts.crossover) return primitive_series_branch(fn, p, opts);
  return primitive_quotient_branch(fn, p);
}

Interval decreasing_on(Primitive fn, double u, double v, const PrimitiveOptions& opts) {
  return Interval(at_point(fn, v, opts).lo(), at_point(fn, u, opts).hi());
}

Interval increasing_on(Primitive fn, double u, double v, const PrimitiveOptions& opts) {
  return Interval(at_point(fn, u, opts).lo(), at_point(fn, v, opts).hi());
}

// Monotone on [0, limit], generic quotient beyond.
Interval split_at(Primitive fn, double u, double v, double limit, bool decreasing, const PrimitiveOptions& opts) {
  if (v <= limit) return decreasing ? decreasing_on(fn, u, v, opts) : increasing_on(fn, u, v, opts);
  const Interval outer = primitive_quotient_branch(fn, Interval(std::fmax(u, limit), v));
  if (u >= limit) return outer;
  const Interval inner = decreasing ? decreasing_on(fn, u, limit, opts) : increasing_on(fn, u, limit, opts);
  return Interval::hull(inner, outer);
}

// Series branch up to the crossover, quotient branch beyond.
Interval by_branch(Primitive fn, double u, double v, const PrimitiveOptions& opts) {
  if (v <= opts.crossover) return primitive_series_branch(fn, Interval(u, v), opts);
  if (u >= opts.crossover) return primitive_quotient_branch(fn, Interval(u, v));
  return Interval::hull(primitive_series_branch(fn, Interval(u, opts.crossover), opts),
                        primitive_quotient_branch(fn, Interval(opts.crossover, v)));
}

// fn on [u, v] with 0 <= u <= v.
Interval on_nonnegative(Primitive fn, double u, double v, const PrimitiveOptions& opts) {
  switch (fn) {
    case Primitive::kSinc: return split_at(fn, u, v, constants::kPiLo, true, opts);
    case Primitive::kXcot: return decreasing_on(fn, u, v, opts);
    case Primitive::kInvSinc2: return increasing_on(fn, u, v, opts);
    case Primitive::kSinhc:
    case Primitive::kXcoth: return increasing_on(fn, u, v, opts);
    case Primitive::kInvSinhc2: return decreasing_on(fn, u, v, opts);
    case Primitive::kDsinc: return split_at(fn, u, v, kDsincMonotoneLimit, true, opts);
    case Primitive::kDsinhc:
    case Primitive::kD2sinhc: return increasing_on(fn, u, v, opts);
    case Primitive::kD2sinc: return by_branch(fn, u, v, opts);
  }
  throw DomainError("unknown primitive");
}

}  // namespace

std::string_view name(Primitive p) {
  for (const auto& [prim, n] : kNames) {
    if (prim == p) return n;
  }
  return "?";
}

std::optional<Primitive> primitive_from_name(std::string_view s) {
  for (const auto& [prim, n] : kNames) {
    if (n == s) return prim;
  }
  return std::nullopt;
}

const PrimitiveOptions& default_primitive_options() {
  static const PrimitiveOptions opts;
  return opts;
}

Interval primitive(Primitive fn, const Interval& a) { return primitive(fn, a, default_primitive_options()); }

Interval primitive(Primitive fn, const Interval& a, const PrimitiveOptions& opts) {
  if (!a.is_finite()) throw DomainError(std::string(name(fn)) + " of an unbounded interval");
  if (requires_circular_domain(fn) && !(a.mag() < constants::kPiLo)) {
    throw DomainError(std::string(name(fn)) + " requires an argument inside (-pi, pi), got " + to_string(a));
  }
  if (!is_odd(fn)) {
    const Interval m = abs(a);
    return on_nonnegative(fn, m.lo(), m.hi(), opts);
  }
  // Odd: f(-x) = -f(x).
  if (a.lo() >= 0) return on_nonnegative(fn, a.lo(), a.hi(), opts);
  if (a.hi() <= 0) return -on_nonnegative(fn, -a.hi(), -a.lo(), opts);
  const Interval pos = on_nonnegative(fn, 0.0, a.hi(), opts);
  const Interval neg = -on_nonnegative(fn, 0.0, -a.lo(), opts);
  return Interval::hull(pos, neg);
}

Interval primitive_series_branch(Primitive fn, const Interval& a, const PrimitiveOptions& opts) {
  const SeriesSet& s = stored();
  const int cap = std::min(opts.terms, kStoredTerms);
  const double r = a.mag();
  switch (fn) {
    case Primitive::kSinc: return Interval(1.0) / eval_series(s.xcsc, a, suggested_terms(s.xcsc, r, cap));
    case Primitive::kXcot: return eval_series(s.xcot, a, suggested_terms(s.xcot, r, cap));
    case Primitive::kInvSinc2: return eval_series(s.inv_sin2, a, suggested_terms(s.inv_sin2, r, cap));
    case Primitive::kSinhc: return eval_series(s.sinhc, a, suggested_terms(s.sinhc, r, cap));
    case Primitive::kXcoth: return eval_series(s.xcoth, a, suggested_terms(s.xcoth, r, cap));
    case Primitive::kInvSinhc2: return eval_series(s.inv_sinh2, a, suggested_terms(s.inv_sinh2, r, cap));
    case Primitive::kDsinc: return a * eval_series(s.dsinc, a, suggested_terms(s.dsinc, r, cap));
    case Primitive::kDsinhc: return a * eval_series(s.dsinhc, a, suggested_terms(s.dsinhc, r, cap));
    case Primitive::kD2sinc: return eval_series(s.d2sinc, a, suggested_terms(s.d2sinc, r, cap));
    case Primitive::kD2sinhc: return eval_series(s.d2sinhc, a, suggested_terms(s.d2sinhc, r, cap));
  }
  throw DomainError("unknown primitive");
}

Interval primitive_quotient_branch(Primitive fn, const Interval& a) {
  if (a.contains_zero()) {
    throw PoleError(std::string(name(fn)) + " quotient form at an interval containing 0: " + to_string(a));
  }
  switch (fn) {
    case Primitive::kSinc: return sin(a) / a;
    case Primitive::kXcot: return a * cos(a) / sin(a);
    case Primitive::kInvSinc2: return sqr(a / sin(a));
    case Primitive::kSinhc: return sinh(a) / a;
    case Primitive::kXcoth: return a * cosh(a) / sinh(a);
    case Primitive::kInvSinhc2: return sqr(a / sinh(a));
    case Primitive::kDsinc: return (cos(a) - sin(a) / a) / a;
    case Primitive::kDsinhc: return (cosh(a) - sinh(a) / a) / a;
    case Primitive::kD2sinc: return ((Interval(2.0) - sqr(a)) * sin(a) - Interval(2.0) * a * cos(a)) / pow_int(a, 3);
    case Primitive::kD2sinhc: return ((Interval(2.0) + sqr(a)) * sinh(a) - Interval(2.0) * a * cosh(a)) / pow_int(a, 3);
  }
  throw DomainError("unknown primitive");
}

namespace {

// x * sum_{n>=0} e_n x^{2n} for sinc' (circular) or sinhc' (hyperbolic).
HighReal derivative_series(const HighReal& x, bool circular) {
  const HighReal t = x * x;
  HighReal sum = 0;
  HighReal power = 1;
  HighReal fact = 6;  // (2n+3)! at n = 0
  for (int n = 0; n < 30; ++n) {
    HighReal term = HighReal(2 * (n + 1)) * power / fact;
    if (circular && n % 2 == 0) term = -term;
    sum += term;
    power *= t;
    fact *= HighReal((2 * n + 4) * (2 * n + 5));
  }
  return x * sum;
}

// sum_{n>=0} e_n x^{2n} for sinc'' (circular) or sinhc'' (hyperbolic).
HighReal second_derivative_series(const HighReal& x, bool circular) {
  const HighReal t = x * x;
  HighReal sum = 0;
  HighReal power = 1;
  HighReal fact = 6;  // (2n+3)! at n = 0
  for (int n = 0; n < 30; ++n) {
    HighReal term = HighReal((2 * n + 2) * (2 * n + 1)) * power / fact;
    if (circular && n % 2 == 0) term = -term;
    sum += term;
    power *= t;
    fact *= HighReal((2 * n + 4) * (2 * n + 5));
  }
  return sum;
}

}  // namespace

HighReal primitive_point(Primitive fn, const HighReal& x) {
  using boost::multiprecision::abs;
  if (x == 0) {
    if (fn == Primitive::kDsinc || fn == Primitive::kDsinhc) return HighReal(0);
    if (fn == Primitive::kD2sinc) return HighReal(-1) / 3;
    if (fn == Primitive::kD2sinhc) return HighReal(1) / 3;
    return HighReal(1);
  }
  switch (fn) {
    case Primitive::kSinc: return sin(x) / x;
    case Primitive::kXcot: return x * cos(x) / sin(x);
    case Primitive::kInvSinc2: {
      const HighReal q = x / sin(x);
      return q * q;
    }
    case Primitive::kSinhc: return sinh(x) / x;
    case Primitive::kXcoth: return x * cosh(x) / sinh(x);
    case Primitive::kInvSinhc2: {
      const HighReal q = x / sinh(x);
      return q * q;
    }
    case Primitive::kDsinc:
      if (abs(x) < HighReal(0.5)) return derivative_series(x, true);
      return (cos(x) - sin(x) / x) / x;
    case Primitive::kDsinhc:
      if (abs(x) < HighReal(0.5)) return derivative_series(x, false);
      return (cosh(x) - sinh(x) / x) / x;
    case Primitive::kD2sinc:
      if (abs(x) < HighReal(0.5)) return second_derivative_series(x, true);
      return ((2 - x * x) * sin(x) - 2 * x * cos(x)) / (x * x * x);
    case Primitive::kD2sinhc:
      if (abs(x) < HighReal(0.5)) return second_derivative_series(x, false);
      return ((2 + x * x) * sinh(x) - 2 * x * cosh(x)) / (x * x * x);
  }
  throw DomainError("unknown primitive");
}

}  // namespace ineqcert
