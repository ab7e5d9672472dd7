#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqcert/high_precision.hpp"
#include "ineqcert/interval.hpp"
#include "ineqcert/primitives.hpp"
#include "ineqcert/rational.hpp"

namespace ineqcert {

enum class Func { kSin, kCos, kSinh, kCosh, kTanh, kExp, kLog, kSqrt, kAbs };

std::string_view name(Func f);
std::optional<Func> func_from_name(std::string_view s);

/// A resolved constant: an exact rational literal, or a named value carried as
/// a rigorous enclosure plus a quad-precision approximation.
struct ConstantValue {
  std::string name;  // empty for literals
  std::optional<Rational> exact;
  Interval enclosure;
  HighReal value = 0;

  static ConstantValue literal(const Rational& q);
  static ConstantValue named(std::string name, const Interval& enclosure, const HighReal& value);
};

/// Symbol table used by the parser to resolve named constants.
class ConstantTable {
 public:
  /// Table holding pi and e.
  static ConstantTable with_builtins();

  void add(const std::string& name, const Interval& enclosure, const HighReal& value);
  const ConstantValue* find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, ConstantValue, std::less<>> table_;
};

enum class NodeKind { kConst, kVar, kAdd, kSub, kMul, kDiv, kNeg, kPowInt, kPowConst, kFn, kPrim };

/// Immutable expression tree over the single variable x. Copies share structure.
class Expr {
 public:
  Expr() = default;

  static Expr constant(const Rational& q);
  static Expr constant(const ConstantValue& c);
  static Expr var();
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  static Expr neg(Expr a);
  static Expr pow_int(Expr base, int exponent);
  /// Exponent must not depend on x.
  static Expr pow_const(Expr base, Expr exponent);
  static Expr fn(Func f, Expr a);
  static Expr prim(Primitive p, Expr a);

  bool valid() const { return static_cast<bool>(node_); }
  NodeKind kind() const;
  std::size_t arity() const;
  const Expr& arg(std::size_t i) const;
  const ConstantValue& constant_value() const;
  int exponent() const;
  Func func() const;
  Primitive primitive() const;
  bool depends_on_x() const;
  /// True for an exact rational literal equal to q.
  bool is_rational(const Rational& q) const;
  std::size_t size() const;

  friend bool operator==(const Expr& a, const Expr& b);

  struct Node;  // opaque

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical text; parse(to_string(e)) is structurally equal to e.
std::string to_string(const Expr& e);

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

// --- parsing -------------------------------------------------------------

/// Parses an expression. Grammar: numbers (integer, decimal, exponent
/// notation, and rational literals `p/q` written without spaces), the
/// variable x, named constants from `constants`, + - * / ^, parentheses and
/// function calls. ^ is right-associative and binds tighter than unary minus,
/// which binds tighter than * and /.
Expr parse_expr(std::string_view text, const ConstantTable& constants = ConstantTable::with_builtins());

enum class Relation { kLess, kLessEq, kGreater, kGreaterEq };
std::string_view to_string(Relation r);
bool is_strict(Relation r);

struct DomainBound {
  Expr expr;  // invalid for infinite bounds
  Interval enclosure;
  bool infinite = false;
};

struct SharpPoint {
  Expr expr;
  Interval enclosure;
};

/// `<expr> REL <expr> on [a, b] [sharp at {p1, ...}]`.
struct InequalityStmt {
  Expr lhs;
  Expr rhs;
  Relation relation = Relation::kLessEq;
  DomainBound lo;
  DomainBound hi;
  std::vector<SharpPoint> sharp_points;

  bool bounded() const { return !lo.infinite && !hi.infinite; }
  /// Expression that must be >= 0 (or > 0): rhs - lhs for < and <=, lhs - rhs otherwise.
  Expr difference() const;
};

InequalityStmt parse_inequality(std::string_view text,
                                const ConstantTable& constants = ConstantTable::with_builtins());
std::string to_string(const InequalityStmt& s);
bool structurally_equal(const InequalityStmt& a, const InequalityStmt& b);

// --- evaluation ----------------------------------------------------------

/// Rigorous enclosure of e over x. PoleError/DomainError name the failing subexpression.
Interval eval_interval(const Expr& e, const Interval& x);
/// Quad-precision point value; for scans and root refinement only.
HighReal eval_point(const Expr& e, const HighReal& x);

/// Symbolic derivative. Primitive derivatives are expressed through dsinc,
/// dsinhc and their second-order companions d2sinc/d2sinhc, which are not
/// differentiable here. When a domain
/// is given, abs() of an argument that may vanish on it raises UnsupportedError.
Expr differentiate(const Expr& e, std::optional<Interval> domain = std::nullopt);

/// Exact Taylor coefficients c_0..c_order at x = 0, for expressions built from
/// rational literals and functions analytic at 0. Removable 0/0 quotients are
/// resolved by cancelling the common order. Throws UnsupportedError (named
/// constants, unsupported composition) or PoleError (non-removable).
std::vector<Rational> taylor_at_zero(const Expr& e, int order);

}  // namespace ineqcert
