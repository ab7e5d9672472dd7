#include <boost/multiprecision/float128.hpp>

#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"

namespace ineqcert {

namespace {

template <class E>
[[noreturn]] void rethrow_at(const E& err, const Expr& e) {
  throw E(std::string(err.what()) + " in subexpression `" + to_string(e) + "`");
}

Interval apply_func(Func f, const Interval& a) {
  switch (f) {
    case Func::kSin: return sin(a);
    case Func::kCos: return cos(a);
    case Func::kSinh: return sinh(a);
    case Func::kCosh: return cosh(a);
    case Func::kTanh: return tanh(a);
    case Func::kExp: return exp(a);
    case Func::kLog: return log(a);
    case Func::kSqrt: return sqrt(a);
    case Func::kAbs: return abs(a);
  }
  throw DomainError("unknown function");
}

Interval eval_node(const Expr& e, const Interval& x) {
  switch (e.kind()) {
    case NodeKind::kConst: return e.constant_value().enclosure;
    case NodeKind::kVar: return x;
    default: break;
  }
  std::vector<Interval> args;
  args.reserve(e.arity());
  for (std::size_t i = 0; i < e.arity(); ++i) args.push_back(eval_node(e.arg(i), x));
  try {
    switch (e.kind()) {
      case NodeKind::kAdd: return args[0] + args[1];
      case NodeKind::kSub: return args[0] - args[1];
      case NodeKind::kMul:
        if (e.arg(0) == e.arg(1)) return sqr(args[0]);
        return args[0] * args[1];
      case NodeKind::kDiv: return args[0] / args[1];
      case NodeKind::kNeg: return -args[0];
      case NodeKind::kPowInt:
        if (e.exponent() >= 0) return pow_int(args[0], e.exponent());
        return Interval(1.0) / pow_int(args[0], -e.exponent());
      case NodeKind::kPowConst: return pow_real(args[0], args[1]);
      case NodeKind::kFn: return apply_func(e.func(), args[0]);
      case NodeKind::kPrim: return primitive(e.primitive(), args[0]);
      default: break;
    }
  } catch (const PoleError& err) {
    rethrow_at(err, e);
  } catch (const DomainError& err) {
    rethrow_at(err, e);
  }
  throw DomainError("unknown expression node");
}

HighReal point_func(Func f, const HighReal& a, const Expr& e) {
  using boost::multiprecision::abs;
  switch (f) {
    case Func::kSin: return sin(a);
    case Func::kCos: return cos(a);
    case Func::kSinh: return sinh(a);
    case Func::kCosh: return cosh(a);
    case Func::kTanh: return tanh(a);
    case Func::kExp: return exp(a);
    case Func::kLog:
      if (a <= 0) throw DomainError("log of a non-positive value in subexpression `" + to_string(e) + "`");
      return log(a);
    case Func::kSqrt:
      if (a < 0) throw DomainError("sqrt of a negative value in subexpression `" + to_string(e) + "`");
      return sqrt(a);
    case Func::kAbs: return abs(a);
  }
  throw DomainError("unknown function");
}

HighReal point_node(const Expr& e, const HighReal& x) {
  switch (e.kind()) {
    case NodeKind::kConst: return e.constant_value().value;
    case NodeKind::kVar: return x;
    case NodeKind::kAdd: return point_node(e.arg(0), x) + point_node(e.arg(1), x);
    case NodeKind::kSub: return point_node(e.arg(0), x) - point_node(e.arg(1), x);
    case NodeKind::kMul: return point_node(e.arg(0), x) * point_node(e.arg(1), x);
    case NodeKind::kDiv: {
      const HighReal d = point_node(e.arg(1), x);
      if (d == 0) throw PoleError("division by zero in subexpression `" + to_string(e) + "`");
      return point_node(e.arg(0), x) / d;
    }
    case NodeKind::kNeg: return -point_node(e.arg(0), x);
    case NodeKind::kPowInt: {
      const HighReal b = point_node(e.arg(0), x);
      if (e.exponent() < 0 && b == 0) throw PoleError("zero to a negative power in `" + to_string(e) + "`");
      return boost::multiprecision::pow(b, e.exponent());
    }
    case NodeKind::kPowConst: {
      const HighReal b = point_node(e.arg(0), x);
      if (b <= 0) throw DomainError("real power of a non-positive base in `" + to_string(e) + "`");
      return boost::multiprecision::pow(b, point_node(e.arg(1), x));
    }
    case NodeKind::kFn: return point_func(e.func(), point_node(e.arg(0), x), e);
    case NodeKind::kPrim: {
      const HighReal a = point_node(e.arg(0), x);
      const Primitive p = e.primitive();
      if ((p == Primitive::kXcot || p == Primitive::kInvSinc2) && abs(a) >= hp_pi()) {
        throw DomainError(std::string(name(p)) + " outside (-pi, pi) in `" + to_string(e) + "`");
      }
      return primitive_point(p, a);
    }
  }
  throw DomainError("unknown expression node");
}

}  // namespace

Interval eval_interval(const Expr& e, const Interval& x) {
  if (!e.valid()) throw DomainError("evaluation of an empty expression");
  return eval_node(e, x);
}

HighReal eval_point(const Expr& e, const HighReal& x) {
  if (!e.valid()) throw DomainError("evaluation of an empty expression");
  return point_node(e, x);
}

}  // namespace ineqcert
