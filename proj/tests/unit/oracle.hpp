// Reference values for tests. Written against boost float128 directly so that
// they share no code with the library's evaluators.
#pragma once

#include <cmath>
#include <vector>

#include <boost/multiprecision/float128.hpp>

#include "ineqcert/expr.hpp"
#include "ineqcert/primitives.hpp"
#include "ineqcert/rational.hpp"

namespace oracle {

using Q = boost::multiprecision::float128;

inline Q to_q(const ineqcert::Rational& r) {
  return Q(r.numerator().get_str()) / Q(r.denominator().get_str());
}

// sum_{n>=0} s^n x^(2n) / (2n+1)!, differentiated k times (k = 0, 1, 2).
inline Q odd_over_x_series(const Q& x, bool alternating, int k) {
  Q total = 0;
  Q fact = 1;  // (2n+1)!
  for (int n = 0; n < 60; ++n) {
    if (n > 0) fact *= Q(2 * n) * Q(2 * n + 1);
    const int p = 2 * n;
    if (p < k) continue;
    Q coef = 1;
    for (int j = 0; j < k; ++j) coef *= Q(p - j);
    Q term = coef * boost::multiprecision::pow(x, p - k) / fact;
    if (alternating && n % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

inline Q prim(ineqcert::Primitive p, const Q& x) {
  using ineqcert::Primitive;
  using boost::multiprecision::abs;
  const bool small = abs(x) < Q(0.25);
  switch (p) {
    case Primitive::kSinc: return small ? odd_over_x_series(x, true, 0) : sin(x) / x;
    case Primitive::kSinhc: return small ? odd_over_x_series(x, false, 0) : sinh(x) / x;
    case Primitive::kDsinc: return small ? odd_over_x_series(x, true, 1) : (x * cos(x) - sin(x)) / (x * x);
    case Primitive::kDsinhc: return small ? odd_over_x_series(x, false, 1) : (x * cosh(x) - sinh(x)) / (x * x);
    case Primitive::kD2sinc:
      return small ? odd_over_x_series(x, true, 2) : -sin(x) / x - 2 * cos(x) / (x * x) + 2 * sin(x) / (x * x * x);
    case Primitive::kD2sinhc:
      return small ? odd_over_x_series(x, false, 2) : sinh(x) / x - 2 * cosh(x) / (x * x) + 2 * sinh(x) / (x * x * x);
    case Primitive::kXcot: return x == 0 ? Q(1) : cos(x) / odd_over_x_series(x, true, 0);
    case Primitive::kXcoth: return x == 0 ? Q(1) : cosh(x) / odd_over_x_series(x, false, 0);
    case Primitive::kInvSinc2: {
      const Q s = odd_over_x_series(x, true, 0);
      return 1 / (s * s);
    }
    case Primitive::kInvSinhc2: {
      const Q s = small ? odd_over_x_series(x, false, 0) : sinh(x) / x;
      return 1 / (s * s);
    }
  }
  return Q(0);
}

inline Q fn(ineqcert::Func f, const Q& x) {
  using ineqcert::Func;
  switch (f) {
    case Func::kSin: return sin(x);
    case Func::kCos: return cos(x);
    case Func::kSinh: return sinh(x);
    case Func::kCosh: return cosh(x);
    case Func::kTanh: return tanh(x);
    case Func::kExp: return exp(x);
    case Func::kLog: return log(x);
    case Func::kSqrt: return sqrt(x);
    case Func::kAbs: return abs(x);
  }
  return Q(0);
}

/// Power-series arithmetic on truncated coefficient lists c_0..c_{n-1}.
using Poly = std::vector<ineqcert::Rational>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size(), ineqcert::Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly div(const Poly& a, const Poly& b) {
  Poly q(a.size(), ineqcert::Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    ineqcert::Rational s = a[i];
    for (std::size_t j = 1; j <= i; ++j) s -= b[j] * q[i - j];
    q[i] = s / b[0];
  }
  return q;
}

/// Taylor coefficients of sin(x)/x (or sinh(x)/x) up to x^(n-1).
inline Poly sinc_series(std::size_t n, bool alternating) {
  Poly r(n, ineqcert::Rational(0));
  ineqcert::Rational fact(1);
  for (std::size_t k = 0; 2 * k < n; ++k) {
    if (k > 0) fact *= ineqcert::Rational(static_cast<long>((2 * k) * (2 * k + 1)));
    ineqcert::Rational v = ineqcert::Rational(1) / fact;
    r[2 * k] = (alternating && k % 2 == 1) ? -v : v;
  }
  return r;
}

/// Taylor coefficients of cos(x) (or cosh(x)) up to x^(n-1).
inline Poly cos_series(std::size_t n, bool alternating) {
  Poly r(n, ineqcert::Rational(0));
  ineqcert::Rational fact(1);
  for (std::size_t k = 0; 2 * k < n; ++k) {
    if (k > 0) fact *= ineqcert::Rational(static_cast<long>((2 * k - 1) * (2 * k)));
    ineqcert::Rational v = ineqcert::Rational(1) / fact;
    r[2 * k] = (alternating && k % 2 == 1) ? -v : v;
  }
  return r;
}

}  // namespace oracle
