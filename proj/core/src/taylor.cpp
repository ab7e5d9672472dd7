#include <algorithm>

#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"
#include "ineqcert/series.hpp"

namespace ineqcert {

namespace {

// Truncated power series at 0; c holds every coefficient that is known exactly.
struct Jet {
  std::vector<Rational> c;

  std::size_t known() const { return c.size(); }
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c.size() && c[v].is_zero()) ++v;
    return v;
  }
};

Jet constant(const Rational& q, std::size_t len) {
  Jet j;
  j.c.assign(len, Rational(0));
  if (len > 0) j.c[0] = q;
  return j;
}

Jet add(const Jet& a, const Jet& b, int sign) {
  Jet r;
  const std::size_t n = std::min(a.known(), b.known());
  r.c.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.c[i] = sign > 0 ? a.c[i] + b.c[i] : a.c[i] - b.c[i];
  return r;
}

Jet mul(const Jet& a, const Jet& b) {
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  const std::size_t n = std::min(a.known() + vb, b.known() + va);
  Jet r;
  r.c.assign(n, Rational(0));
  for (std::size_t i = va; i < a.known(); ++i) {
    for (std::size_t j = vb; j < b.known() && i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

Jet div(const Jet& a, const Jet& b) {
  const std::size_t vb = b.valuation();
  if (vb == b.known()) throw PoleError("division by a series that vanishes to every computed order");
  const std::size_t va = a.valuation();
  if (va < vb) throw PoleError("non-removable pole at 0 (order " + std::to_string(vb - va) + ")");
  const std::size_t shift = va - vb;
  Jet r;
  if (va == a.known()) {
    r.c.assign(a.known() - vb, Rational(0));
    return r;
  }
  // A/B with A = a / x^va, B = b / x^vb.
  const std::size_t m = std::min(a.known() - va, b.known() - vb);
  r.c.assign(shift + m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    Rational acc = a.c[va + k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b.c[vb + j] * r.c[shift + k - j];
    r.c[shift + k] = acc / b.c[vb];
  }
  return r;
}

// sum_k f[k] u^k with u(0) = 0.
Jet compose(const std::vector<Rational>& f, const Jet& u) {
  if (u.known() == 0) return u;
  if (!u.c[0].is_zero()) throw UnsupportedError("composition at a nonzero inner value");
  const std::size_t n = std::min(u.known(), f.size());
  Jet r = constant(f.empty() ? Rational(0) : f[0], n);
  Jet power = constant(1, n);
  for (std::size_t k = 1; k < n; ++k) {
    power = mul(power, u);
    r.c.resize(std::min(r.known(), power.known()));
    if (f[k].is_zero()) continue;
    for (std::size_t i = 0; i < r.known(); ++i) r.c[i] += f[k] * power.c[i];
  }
  return r;
}

Rational inv_factorial(unsigned n) { return Rational(mpz_class(1), factorial(n)); }

std::vector<Rational> func_coeffs(Func f, std::size_t n) {
  std::vector<Rational> c(n, Rational(0));
  switch (f) {
    case Func::kSin:
    case Func::kSinh:
      for (std::size_t k = 1; k < n; k += 2) {
        c[k] = inv_factorial(static_cast<unsigned>(k));
        if (f == Func::kSin && (k / 2) % 2 == 1) c[k] = -c[k];
      }
      return c;
    case Func::kCos:
    case Func::kCosh:
      for (std::size_t k = 0; k < n; k += 2) {
        c[k] = inv_factorial(static_cast<unsigned>(k));
        if (f == Func::kCos && (k / 2) % 2 == 1) c[k] = -c[k];
      }
      return c;
    case Func::kExp:
      for (std::size_t k = 0; k < n; ++k) c[k] = inv_factorial(static_cast<unsigned>(k));
      return c;
    default: break;
  }
  throw UnsupportedError("no exact expansion of " + std::string(name(f)) + " at 0");
}

// Even series f(u) = c0 + sum c_k u^(2k), optionally times u.
std::vector<Rational> even_series_coeffs(std::string_view series_name, std::size_t n, bool odd) {
  std::vector<Rational> c(n, Rational(0));
  const int terms = static_cast<int>(n / 2 + 1);
  const EvenSeries s = series(series_name, std::max(terms, 1));
  const std::size_t base = odd ? 1 : 0;
  if (base < n) c[base] = s.constant_term;
  for (int k = 1; k <= s.terms(); ++k) {
    const std::size_t idx = base + 2 * static_cast<std::size_t>(k);
    if (idx < n) c[idx] = s.coeffs[static_cast<std::size_t>(k - 1)];
  }
  return c;
}

std::vector<Rational> sinc_coeffs(std::size_t n, bool hyperbolic) {
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t k = 0; k < n; k += 2) {
    c[k] = inv_factorial(static_cast<unsigned>(k + 1));
    if (!hyperbolic && (k / 2) % 2 == 1) c[k] = -c[k];
  }
  return c;
}

// First n coefficients of the termwise derivative.
std::vector<Rational> derivative(const std::vector<Rational>& s, std::size_t n) {
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t k = 0; k + 1 < s.size() && k < n; ++k) c[k] = s[k + 1] * Rational(static_cast<long>(k + 1));
  return c;
}

std::vector<Rational> prim_coeffs(Primitive p, std::size_t n) {
  switch (p) {
    case Primitive::kSinc: return sinc_coeffs(n, false);
    case Primitive::kSinhc: return sinc_coeffs(n, true);
    case Primitive::kXcot: return even_series_coeffs("xcot", n, false);
    case Primitive::kXcoth: return even_series_coeffs("xcoth_aux", n, false);
    case Primitive::kInvSinc2: return even_series_coeffs("inv_sin2", n, false);
    case Primitive::kInvSinhc2: return even_series_coeffs("inv_sinh2", n, false);
    case Primitive::kDsinc: return derivative(sinc_coeffs(n + 1, false), n);
    case Primitive::kDsinhc: return derivative(sinc_coeffs(n + 1, true), n);
    case Primitive::kD2sinc: return derivative(derivative(sinc_coeffs(n + 2, false), n + 1), n);
    case Primitive::kD2sinhc: return derivative(derivative(sinc_coeffs(n + 2, true), n + 1), n);
  }
  throw UnsupportedError("unknown primitive");
}

Jet pow_jet(const Jet& a, int n, std::size_t len) {
  if (n < 0) return div(constant(1, len), pow_jet(a, -n, len));
  Jet r = constant(1, len);
  Jet b = a;
  unsigned e = static_cast<unsigned>(n);
  while (e > 0) {
    if (e & 1u) r = mul(r, b);
    e >>= 1u;
    if (e) b = mul(b, b);
  }
  return r;
}

Jet jet(const Expr& e, std::size_t len) {
  switch (e.kind()) {
    case NodeKind::kConst: {
      const auto& c = e.constant_value();
      if (!c.name.empty() || !c.exact) throw UnsupportedError("named constant '" + c.name + "' has no exact value");
      return constant(*c.exact, len);
    }
    case NodeKind::kVar: {
      Jet j = constant(0, len);
      if (len > 1) j.c[1] = 1;
      return j;
    }
    case NodeKind::kAdd: return add(jet(e.arg(0), len), jet(e.arg(1), len), 1);
    case NodeKind::kSub: return add(jet(e.arg(0), len), jet(e.arg(1), len), -1);
    case NodeKind::kMul: return mul(jet(e.arg(0), len), jet(e.arg(1), len));
    case NodeKind::kDiv: return div(jet(e.arg(0), len), jet(e.arg(1), len));
    case NodeKind::kNeg: {
      Jet j = jet(e.arg(0), len);
      for (auto& c : j.c) c = -c;
      return j;
    }
    case NodeKind::kPowInt: return pow_jet(jet(e.arg(0), len), e.exponent(), len);
    case NodeKind::kPowConst: {
      const Expr& ex = e.arg(1);
      if (ex.kind() == NodeKind::kConst && ex.constant_value().exact && ex.constant_value().exact->is_integer() &&
          ex.constant_value().exact->numerator().fits_sint_p()) {
        return pow_jet(jet(e.arg(0), len), static_cast<int>(ex.constant_value().exact->numerator().get_si()), len);
      }
      throw UnsupportedError("no exact expansion of a real power");
    }
    case NodeKind::kFn: {
      const Jet u = jet(e.arg(0), len);
      if (e.func() == Func::kAbs) {
        if (u.known() > 0 && u.c[0].sign() != 0) {
          if (u.c[0].sign() > 0) return u;
          Jet r = u;
          for (auto& c : r.c) c = -c;
          return r;
        }
        throw UnsupportedError("abs of an argument vanishing at 0");
      }
      if (e.func() == Func::kLog || e.func() == Func::kSqrt || e.func() == Func::kTanh) {
        if (e.func() == Func::kTanh) {
          return div(compose(func_coeffs(Func::kSinh, len), u), compose(func_coeffs(Func::kCosh, len), u));
        }
        if (u.known() == 0 || !(u.c[0] == Rational(1))) {
          throw UnsupportedError("no exact expansion of " + std::string(name(e.func())) + " away from argument 1");
        }
        Jet w = u;
        w.c[0] = 0;
        std::vector<Rational> f(len, Rational(0));
        if (e.func() == Func::kLog) {
          for (std::size_t k = 1; k < len; ++k) f[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        } else {
          // binomial(1/2, k)
          Rational b(1);
          f[0] = 1;
          for (std::size_t k = 1; k < len; ++k) {
            b *= (Rational(1, 2) - Rational(static_cast<long>(k - 1))) / Rational(static_cast<long>(k));
            f[k] = b;
          }
        }
        return compose(f, w);
      }
      return compose(func_coeffs(e.func(), len), u);
    }
    case NodeKind::kPrim: return compose(prim_coeffs(e.primitive(), len), jet(e.arg(0), len));
  }
  throw UnsupportedError("unknown expression node");
}

}  // namespace

std::vector<Rational> taylor_at_zero(const Expr& e, int order) {
  if (order < 0) throw DomainError("negative Taylor order");
  // Slack absorbs the order lost to removable 0/0 quotients.
  constexpr std::size_t kSlack = 12;
  const std::size_t want = static_cast<std::size_t>(order) + 1;
  const Jet j = jet(e, want + kSlack);
  if (j.known() < want) {
    throw UnsupportedError("cancellation exceeds the working order; only " + std::to_string(j.known()) +
                           " coefficients are exact");
  }
  return {j.c.begin(), j.c.begin() + static_cast<std::ptrdiff_t>(want)};
}

}  // namespace ineqcert
