#pragma once

#include <cmath>
#include <limits>

namespace ineqcert::rounding {

// Outward rounding without touching the FPU mode. Each basic operation is
// computed in round-to-nearest; an error-free transformation recovers the
// sign of the rounding error and the bound is nudged by one ulp only on the
// side where the exact result may lie. Results outside the normal range fall
// back to unconditional nudging.

inline double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

inline double nudge_down(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = next_down(x);
  return x;
}
inline double nudge_up(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = next_up(x);
  return x;
}

constexpr double kTiny = 0x1p-960;  // below this, FMA residuals may be inexact

struct Bounds {
  double lo;
  double hi;
};

/// Turns a rounded result `r` and the sign of (exact - r) into bounds.
inline Bounds from_error_sign(double r, double err) {
  if (err > 0) return {r, next_up(r)};
  if (err < 0) return {next_down(r), r};
  return {r, r};
}

inline Bounds add(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return {next_down(s), next_up(s)};
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return from_error_sign(s, err);
}

inline Bounds sub(double a, double b) { return add(a, -b); }

inline Bounds mul(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return {next_down(p), next_up(p)};
  if (p != 0 && std::fabs(p) < kTiny) return {next_down(p), next_up(p)};
  if (p == 0 && a != 0 && b != 0) return {next_down(0.0), next_up(0.0)};  // underflow
  return from_error_sign(p, std::fma(a, b, -p));
}

inline Bounds div(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return {next_down(q), next_up(q)};
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) {
    if (a == 0) return {0.0, 0.0};
    return {next_down(q), next_up(q)};
  }
  // a = q*b + r exactly; exact quotient is q + r/b
  const double r = std::fma(-q, b, a);
  const double err = (b > 0) ? r : -r;
  return from_error_sign(q, err);
}

inline Bounds sqrt(double a) {
  const double s = std::sqrt(a);
  if (s == 0 || !std::isfinite(s)) return {s, s};
  const double r = std::fma(-s, s, a);  // a - s^2
  return from_error_sign(s, r);
}

inline double add_down(double a, double b) { return add(a, b).lo; }
inline double add_up(double a, double b) { return add(a, b).hi; }
inline double mul_down(double a, double b) { return mul(a, b).lo; }
inline double mul_up(double a, double b) { return mul(a, b).hi; }
inline double div_down(double a, double b) { return div(a, b).lo; }
inline double div_up(double a, double b) { return div(a, b).hi; }

}  // namespace ineqcert::rounding
