#include "ineqcert/expr.hpp"

#include <array>
#include <sstream>

#include "ineqcert/errors.hpp"

namespace ineqcert {

struct Expr::Node {
  NodeKind kind = NodeKind::kConst;
  ConstantValue constant;
  int exponent = 0;
  Func func = Func::kSin;
  Primitive prim = Primitive::kSinc;
  std::vector<Expr> args;
  bool has_x = false;
  std::size_t size = 1;
};

namespace {

constexpr std::array<std::pair<Func, std::string_view>, 9> kFuncNames = {{
    {Func::kSin, "sin"},
    {Func::kCos, "cos"},
    {Func::kSinh, "sinh"},
    {Func::kCosh, "cosh"},
    {Func::kTanh, "tanh"},
    {Func::kExp, "exp"},
    {Func::kLog, "log"},
    {Func::kSqrt, "sqrt"},
    {Func::kAbs, "abs"},
}};

HighReal to_high(const Rational& q) {
  return HighReal(q.numerator_string()) / HighReal(q.denominator_string());
}

}  // namespace

std::string_view name(Func f) {
  for (const auto& [fn, n] : kFuncNames) {
    if (fn == f) return n;
  }
  return "?";
}

std::optional<Func> func_from_name(std::string_view s) {
  for (const auto& [fn, n] : kFuncNames) {
    if (n == s) return fn;
  }
  return std::nullopt;
}

ConstantValue ConstantValue::literal(const Rational& q) {
  ConstantValue c;
  c.exact = q;
  c.enclosure = Interval(q.lower_double(), q.upper_double());
  c.value = to_high(q);
  return c;
}

ConstantValue ConstantValue::named(std::string name, const Interval& enclosure, const HighReal& value) {
  ConstantValue c;
  c.name = std::move(name);
  c.enclosure = enclosure;
  c.value = value;
  return c;
}

ConstantTable ConstantTable::with_builtins() {
  ConstantTable t;
  t.add("pi", constants::kPi, hp_pi());
  t.add("e", exp(Interval(1.0)), hp_e());
  return t;
}

void ConstantTable::add(const std::string& name, const Interval& enclosure, const HighReal& value) {
  table_.insert_or_assign(name, ConstantValue::named(name, enclosure, value));
}

const ConstantValue* ConstantTable::find(std::string_view name) const {
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<std::string> ConstantTable::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : table_) out.push_back(k);
  return out;
}

// --- construction --------------------------------------------------------

namespace {

std::shared_ptr<Expr::Node> make_node(NodeKind kind, std::vector<Expr> args);

}  // namespace

Expr Expr::constant(const Rational& q) { return constant(ConstantValue::literal(q)); }

Expr Expr::constant(const ConstantValue& c) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kConst;
  n->constant = c;
  return Expr(std::move(n));
}

Expr Expr::var() {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kVar;
  n->has_x = true;
  return Expr(std::move(n));
}

namespace {

std::shared_ptr<Expr::Node> make_node(NodeKind kind, std::vector<Expr> args) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  for (const auto& a : args) {
    if (!a.valid()) throw DomainError("expression node with an empty argument");
    n->has_x = n->has_x || a.depends_on_x();
    n->size += a.size();
  }
  n->args = std::move(args);
  return n;
}

}  // namespace

Expr Expr::add(Expr a, Expr b) { return Expr(make_node(NodeKind::kAdd, {std::move(a), std::move(b)})); }
Expr Expr::sub(Expr a, Expr b) { return Expr(make_node(NodeKind::kSub, {std::move(a), std::move(b)})); }
Expr Expr::mul(Expr a, Expr b) { return Expr(make_node(NodeKind::kMul, {std::move(a), std::move(b)})); }
Expr Expr::div(Expr a, Expr b) { return Expr(make_node(NodeKind::kDiv, {std::move(a), std::move(b)})); }
Expr Expr::neg(Expr a) { return Expr(make_node(NodeKind::kNeg, {std::move(a)})); }

Expr Expr::pow_int(Expr base, int exponent) {
  auto n = make_node(NodeKind::kPowInt, {std::move(base)});
  n->exponent = exponent;
  return Expr(std::move(n));
}

Expr Expr::pow_const(Expr base, Expr exponent) {
  if (exponent.depends_on_x()) throw DomainError("exponent of a real power must not depend on x");
  return Expr(make_node(NodeKind::kPowConst, {std::move(base), std::move(exponent)}));
}

Expr Expr::fn(Func f, Expr a) {
  auto n = make_node(NodeKind::kFn, {std::move(a)});
  n->func = f;
  return Expr(std::move(n));
}

Expr Expr::prim(Primitive p, Expr a) {
  auto n = make_node(NodeKind::kPrim, {std::move(a)});
  n->prim = p;
  return Expr(std::move(n));
}

NodeKind Expr::kind() const { return node_->kind; }
std::size_t Expr::arity() const { return node_->args.size(); }
const Expr& Expr::arg(std::size_t i) const { return node_->args.at(i); }
const ConstantValue& Expr::constant_value() const { return node_->constant; }
int Expr::exponent() const { return node_->exponent; }
Func Expr::func() const { return node_->func; }
Primitive Expr::primitive() const { return node_->prim; }
bool Expr::depends_on_x() const { return node_ && node_->has_x; }
std::size_t Expr::size() const { return node_ ? node_->size : 0; }

bool Expr::is_rational(const Rational& q) const {
  return node_ && node_->kind == NodeKind::kConst && node_->constant.exact && *node_->constant.exact == q;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.args.size() != y.args.size()) return false;
  switch (x.kind) {
    case NodeKind::kConst:
      if (x.constant.name != y.constant.name) return false;
      if (x.constant.name.empty()) return x.constant.exact == y.constant.exact;
      break;
    case NodeKind::kPowInt:
      if (x.exponent != y.exponent) return false;
      break;
    case NodeKind::kFn:
      if (x.func != y.func) return false;
      break;
    case NodeKind::kPrim:
      if (x.prim != y.prim) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!(x.args[i] == y.args[i])) return false;
  }
  return true;
}

Expr operator+(Expr a, Expr b) { return Expr::add(std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::sub(std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::mul(std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::div(std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::neg(std::move(a)); }

// --- printing ------------------------------------------------------------

namespace {

// Binding strength used by the printer; mirrors the parser's grammar levels.
enum Prec : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int precedence(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::kAdd:
    case NodeKind::kSub: return kSum;
    case NodeKind::kMul:
    case NodeKind::kDiv: return kProduct;
    case NodeKind::kNeg: return kUnary;
    case NodeKind::kPowInt:
    case NodeKind::kPowConst: return kPower;
    case NodeKind::kConst: {
      const auto& c = e.constant_value();
      if (c.name.empty() && c.exact && c.exact->sign() < 0) return kUnary;
      // "p/q" literals read as one token but must not sit under ^ or after /
      if (c.name.empty() && c.exact && !c.exact->is_integer()) return kProduct;
      return kAtom;
    }
    default: return kAtom;
  }
}

void print(std::ostream& os, const Expr& e, int min_prec);

void print_wrapped(std::ostream& os, const Expr& e, int min_prec) {
  if (precedence(e) < min_prec) {
    os << '(';
    print(os, e, 0);
    os << ')';
  } else {
    print(os, e, min_prec);
  }
}

void print(std::ostream& os, const Expr& e, int /*min_prec*/) {
  switch (e.kind()) {
    case NodeKind::kConst: {
      const auto& c = e.constant_value();
      if (!c.name.empty()) {
        os << c.name;
      } else if (c.exact->sign() < 0) {
        os << '-' << c.exact->abs().str();
      } else {
        os << c.exact->str();
      }
      return;
    }
    case NodeKind::kVar: os << 'x'; return;
    case NodeKind::kAdd:
    case NodeKind::kSub:
      print_wrapped(os, e.arg(0), kSum);
      os << (e.kind() == NodeKind::kAdd ? " + " : " - ");
      print_wrapped(os, e.arg(1), kProduct);
      return;
    case NodeKind::kMul:
    case NodeKind::kDiv:
      print_wrapped(os, e.arg(0), kProduct);
      // Spaces keep "a / b" from lexing as a rational literal.
      os << (e.kind() == NodeKind::kMul ? " * " : " / ");
      print_wrapped(os, e.arg(1), kUnary);
      return;
    case NodeKind::kNeg:
      os << '-';
      print_wrapped(os, e.arg(0), kUnary);
      return;
    case NodeKind::kPowInt:
      print_wrapped(os, e.arg(0), kAtom);
      if (e.exponent() < 0) {
        os << "^(" << e.exponent() << ')';
      } else {
        os << '^' << e.exponent();
      }
      return;
    case NodeKind::kPowConst: {
      print_wrapped(os, e.arg(0), kAtom);
      os << '^';
      const Expr& ex = e.arg(1);
      const bool simple_name = ex.kind() == NodeKind::kConst && !ex.constant_value().name.empty();
      if (simple_name) {
        os << ex.constant_value().name;
      } else {
        os << '(';
        print(os, ex, 0);
        os << ')';
      }
      return;
    }
    case NodeKind::kFn:
      os << name(e.func()) << '(';
      print(os, e.arg(0), 0);
      os << ')';
      return;
    case NodeKind::kPrim:
      os << name(e.primitive()) << '(';
      print(os, e.arg(0), 0);
      os << ')';
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  if (!e.valid()) return "<empty>";
  std::ostringstream os;
  print(os, e, 0);
  return os.str();
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kLess: return "<";
    case Relation::kLessEq: return "<=";
    case Relation::kGreater: return ">";
    case Relation::kGreaterEq: return ">=";
  }
  return "?";
}

bool is_strict(Relation r) { return r == Relation::kLess || r == Relation::kGreater; }

Expr InequalityStmt::difference() const {
  if (relation == Relation::kLess || relation == Relation::kLessEq) return Expr::sub(rhs, lhs);
  return Expr::sub(lhs, rhs);
}

namespace {

std::string bound_text(const DomainBound& b, bool upper) {
  if (b.infinite) return upper ? "inf" : "-inf";
  return to_string(b.expr);
}

}  // namespace

std::string to_string(const InequalityStmt& s) {
  std::string out = to_string(s.lhs) + " " + std::string(to_string(s.relation)) + " " + to_string(s.rhs);
  out += " on [" + bound_text(s.lo, false) + ", " + bound_text(s.hi, true) + "]";
  if (!s.sharp_points.empty()) {
    out += " sharp at {";
    for (std::size_t i = 0; i < s.sharp_points.size(); ++i) {
      if (i) out += ", ";
      out += to_string(s.sharp_points[i].expr);
    }
    out += "}";
  }
  return out;
}

bool structurally_equal(const InequalityStmt& a, const InequalityStmt& b) {
  auto same_bound = [](const DomainBound& x, const DomainBound& y) {
    if (x.infinite != y.infinite) return false;
    return x.infinite || x.expr == y.expr;
  };
  if (!(a.lhs == b.lhs) || !(a.rhs == b.rhs) || a.relation != b.relation) return false;
  if (!same_bound(a.lo, b.lo) || !same_bound(a.hi, b.hi)) return false;
  if (a.sharp_points.size() != b.sharp_points.size()) return false;
  for (std::size_t i = 0; i < a.sharp_points.size(); ++i) {
    if (!(a.sharp_points[i].expr == b.sharp_points[i].expr)) return false;
  }
  return true;
}

}  // namespace ineqcert
