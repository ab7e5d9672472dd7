#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"

namespace ineqcert {

namespace {

bool exact(const Expr& e) {
  return e.kind() == NodeKind::kConst && e.constant_value().name.empty() && e.constant_value().exact.has_value();
}

const Rational& value(const Expr& e) { return *e.constant_value().exact; }

// Builders that fold exact constants and drop neutral elements.
Expr add(const Expr& a, const Expr& b) {
  if (a.is_rational(0)) return b;
  if (b.is_rational(0)) return a;
  if (exact(a) && exact(b)) return Expr::constant(value(a) + value(b));
  return Expr::add(a, b);
}

Expr neg(const Expr& a) {
  if (exact(a)) return Expr::constant(-value(a));
  if (a.kind() == NodeKind::kNeg) return a.arg(0);
  return Expr::neg(a);
}

Expr sub(const Expr& a, const Expr& b) {
  if (b.is_rational(0)) return a;
  if (a.is_rational(0)) return neg(b);
  if (exact(a) && exact(b)) return Expr::constant(value(a) - value(b));
  return Expr::sub(a, b);
}

Expr mul(const Expr& a, const Expr& b) {
  if (a.is_rational(0) || b.is_rational(0)) return Expr::constant(0);
  if (a.is_rational(1)) return b;
  if (b.is_rational(1)) return a;
  if (a.is_rational(-1)) return neg(b);
  if (b.is_rational(-1)) return neg(a);
  if (exact(a) && exact(b)) return Expr::constant(value(a) * value(b));
  return Expr::mul(a, b);
}

Expr div(const Expr& a, const Expr& b) {
  if (a.is_rational(0)) return Expr::constant(0);
  if (b.is_rational(1)) return a;
  if (exact(a) && exact(b) && !value(b).is_zero()) return Expr::constant(value(a) / value(b));
  return Expr::div(a, b);
}

Expr pow_int(const Expr& a, int n) {
  if (n == 0) return Expr::constant(1);
  if (n == 1) return a;
  return Expr::pow_int(a, n);
}

Expr prim(Primitive p, const Expr& u) { return Expr::prim(p, u); }
Expr fn(Func f, const Expr& u) { return Expr::fn(f, u); }

// d/du of the outer function, as an expression in u.
Expr outer_derivative(const Expr& e, const std::optional<Interval>& domain) {
  const Expr& u = e.arg(0);
  if (e.kind() == NodeKind::kFn) {
    switch (e.func()) {
      case Func::kSin: return fn(Func::kCos, u);
      case Func::kCos: return neg(fn(Func::kSin, u));
      case Func::kSinh: return fn(Func::kCosh, u);
      case Func::kCosh: return fn(Func::kSinh, u);
      case Func::kTanh: return pow_int(fn(Func::kCosh, u), -2);
      case Func::kExp: return e;
      case Func::kLog: return div(Expr::constant(1), u);
      case Func::kSqrt: return div(Expr::constant(Rational(1, 2)), e);
      case Func::kAbs:
        if (domain) {
          const Interval range = eval_interval(u, *domain);
          if (range.contains_zero()) {
            throw UnsupportedError("abs(" + to_string(u) + ") may vanish on " + to_string(*domain) +
                                   "; derivative not defined there");
          }
        }
        return div(u, e);
    }
  }
  switch (e.primitive()) {
    case Primitive::kSinc: return prim(Primitive::kDsinc, u);
    case Primitive::kSinhc: return prim(Primitive::kDsinhc, u);
    // x cot x = cos x / sinc x
    case Primitive::kXcot:
      return neg(add(div(fn(Func::kSin, u), prim(Primitive::kSinc, u)),
                     div(mul(fn(Func::kCos, u), prim(Primitive::kDsinc, u)), pow_int(prim(Primitive::kSinc, u), 2))));
    // x coth x = cosh x / sinhc x
    case Primitive::kXcoth:
      return sub(div(fn(Func::kSinh, u), prim(Primitive::kSinhc, u)),
                 div(mul(fn(Func::kCosh, u), prim(Primitive::kDsinhc, u)), pow_int(prim(Primitive::kSinhc, u), 2)));
    case Primitive::kInvSinc2:
      return mul(Expr::constant(-2), div(prim(Primitive::kDsinc, u), pow_int(prim(Primitive::kSinc, u), 3)));
    case Primitive::kInvSinhc2:
      return mul(Expr::constant(-2), div(prim(Primitive::kDsinhc, u), pow_int(prim(Primitive::kSinhc, u), 3)));
    case Primitive::kDsinc: return prim(Primitive::kD2sinc, u);
    case Primitive::kDsinhc: return prim(Primitive::kD2sinhc, u);
    case Primitive::kD2sinc:
    case Primitive::kD2sinhc:
      throw UnsupportedError("third derivative of " + std::string(name(e.primitive())) + " is not available");
  }
  throw UnsupportedError("unknown primitive");
}

Expr d(const Expr& e, const std::optional<Interval>& domain) {
  if (!e.depends_on_x()) return Expr::constant(0);
  switch (e.kind()) {
    case NodeKind::kConst: return Expr::constant(0);
    case NodeKind::kVar: return Expr::constant(1);
    case NodeKind::kAdd: return add(d(e.arg(0), domain), d(e.arg(1), domain));
    case NodeKind::kSub: return sub(d(e.arg(0), domain), d(e.arg(1), domain));
    case NodeKind::kNeg: return neg(d(e.arg(0), domain));
    case NodeKind::kMul: {
      const Expr& a = e.arg(0);
      const Expr& b = e.arg(1);
      return add(mul(d(a, domain), b), mul(a, d(b, domain)));
    }
    case NodeKind::kDiv: {
      const Expr& a = e.arg(0);
      const Expr& b = e.arg(1);
      if (!b.depends_on_x()) return div(d(a, domain), b);
      if (!a.depends_on_x()) return neg(div(mul(a, d(b, domain)), pow_int(b, 2)));
      return div(sub(mul(d(a, domain), b), mul(a, d(b, domain))), pow_int(b, 2));
    }
    case NodeKind::kPowInt: {
      const int n = e.exponent();
      const Expr& u = e.arg(0);
      return mul(mul(Expr::constant(n), pow_int(u, n - 1)), d(u, domain));
    }
    case NodeKind::kPowConst: {
      const Expr& u = e.arg(0);
      const Expr& c = e.arg(1);
      const Expr reduced = exact(c) ? Expr::constant(value(c) - 1) : sub(c, Expr::constant(1));
      return mul(mul(c, Expr::pow_const(u, reduced)), d(u, domain));
    }
    case NodeKind::kFn:
    case NodeKind::kPrim: return mul(outer_derivative(e, domain), d(e.arg(0), domain));
  }
  throw UnsupportedError("unknown expression node");
}

}  // namespace

Expr differentiate(const Expr& e, std::optional<Interval> domain) {
  if (!e.valid()) throw DomainError("derivative of an empty expression");
  return d(e, domain);
}

}  // namespace ineqcert
