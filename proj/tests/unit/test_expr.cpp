#include <doctest.h>

#include <functional>
#include <random>

#include "ineqcert/catalog.hpp"
#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ineqcert;
using oracle::Q;

namespace {

HighReal hp(double x) { return HighReal(x); }

// Central difference in quad precision.
HighReal central_difference(const Expr& e, const HighReal& x, const HighReal& h) {
  return (eval_point(e, x + h) - eval_point(e, x - h)) / (2 * h);
}

// |fd - d| <= 1e-6 * max(|d|, 1e-2); the floor keeps sign changes of d from
// turning a tiny absolute error into a huge relative one.
bool derivative_agrees(const Expr& e, const Expr& d, const HighReal& x) {
  const HighReal fd = central_difference(e, x, HighReal(1e-5));
  const HighReal dv = eval_point(d, x);
  const HighReal scale = std::max(HighReal(abs(dv)), HighReal(1e-2));
  return abs(fd - dv) <= HighReal(1e-6) * scale;
}

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 13);
  std::uniform_int_distribution<long> small(1, 9);
  const Expr x = Expr::var();
  if (depth == 0) {
    return pick(rng) % 2 ? x : Expr::constant(Rational(small(rng), small(rng)));
  }
  const Expr a = random_expr(rng, depth - 1);
  const Expr b = random_expr(rng, depth - 1);
  switch (pick(rng)) {
    case 0: return a + b;
    case 1: return a - b;
    case 2: return a * b;
    case 3: return a / (Expr::constant(Rational(2)) + b * b);
    case 4: return Expr::pow_int(a, 2);
    case 5: return Expr::fn(Func::kSin, a);
    case 6: return Expr::fn(Func::kCos, a);
    case 7: return Expr::fn(Func::kExp, a / Expr::constant(Rational(8)));
    case 8: return Expr::prim(Primitive::kSinc, a);
    case 9: return Expr::prim(Primitive::kXcot, x) * a;
    case 10: return Expr::prim(Primitive::kSinhc, a / Expr::constant(Rational(4)));
    case 11: return Expr::prim(Primitive::kInvSinc2, x) + a;
    case 12: return Expr::prim(Primitive::kXcoth, a);
    default: return Expr::fn(Func::kSqrt, Expr::constant(Rational(1)) + a * a);
  }
}

std::vector<std::pair<std::string, Expr>> catalog_expressions() {
  std::vector<std::pair<std::string, Expr>> out;
  const Catalog& cat = builtin_catalog();
  for (const auto& r : cat.inequalities()) {
    out.emplace_back(r.id + ".lhs", r.stmt.lhs);
    out.emplace_back(r.id + ".rhs", r.stmt.rhs);
  }
  for (const auto& m : cat.monotone()) out.emplace_back(m.id, m.function);
  return out;
}

Interval domain_for(const std::string& id) {
  const Catalog& cat = builtin_catalog();
  for (const auto& m : cat.monotone()) {
    if (m.id == id) return Interval(m.lo.hi(), m.hi.lo());
  }
  const std::string rec = id.substr(0, id.rfind('.'));
  return support::certified_domain(cat.get(rec));
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("parse examples") {
    const Expr e = parse_expr("sinc(x)^2 + xcot(x)");
    REQUIRE(e.kind() == NodeKind::kAdd);
    CHECK(e.arg(0).kind() == NodeKind::kPowInt);
    CHECK(e.arg(0).exponent() == 2);
    CHECK(e.arg(0).arg(0).kind() == NodeKind::kPrim);
    CHECK(e.arg(0).arg(0).primitive() == Primitive::kSinc);
    CHECK(e.arg(1).primitive() == Primitive::kXcot);
    const Expr x = Expr::var();
    CHECK(parse_expr("(cos(x)+2)/3") ==
          (Expr::fn(Func::kCos, x) + Expr::constant(Rational(2))) / Expr::constant(Rational(3)));
  }

  TEST_CASE("precedence") {
    CHECK(to_string(parse_expr("-x^2")) == to_string(-Expr::pow_int(Expr::var(), 2)));
    CHECK(parse_expr("2^3^2") == parse_expr("2^(3^2)"));
    CHECK(parse_expr("pi^2/4") == parse_expr("(pi^2)/4"));
    CHECK(parse_expr("1/2/3") == parse_expr("(1/2)/3"));
    CHECK(parse_expr("1/2").is_rational(Rational(1, 2)));
    CHECK(eval_point(parse_expr("2^1/3"), 0) == HighReal(2) / 3);
  }

  TEST_CASE("syntax errors carry offsets") {
    try {
      parse_expr("1 +");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 3);
      CHECK_FALSE(e.expected().empty());
    }
    try {
      parse_expr("sin(x))");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 6);
    }
    CHECK_THROWS_AS(parse_expr("foo(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("tan(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("x^x"), SyntaxError);
  }

  TEST_CASE("inequality statements") {
    const InequalityStmt s = parse_inequality("sinc(x) <= (cos(x)+2)/3 on [-pi/2, pi/2] sharp at {0}");
    CHECK(s.relation == Relation::kLessEq);
    CHECK(s.lo.enclosure.contains(-1.5707963267948966));
    CHECK(s.hi.enclosure.width() > 0);
    REQUIRE(s.sharp_points.size() == 1);
    CHECK(s.sharp_points[0].enclosure == Interval(0.0));
    CHECK(s.bounded());
    const InequalityStmt t = parse_inequality("x >= x on [0,1]");
    CHECK(t.relation == Relation::kGreaterEq);
    CHECK_FALSE(is_strict(t.relation));
    CHECK_THROWS_AS(parse_inequality("sinc(x) < 1 on [1, 0]"), DomainError);
    CHECK_THROWS_AS(parse_inequality("sinc(x) < 1 on [0, 1] sharp at {2}"), DomainError);
    CHECK_FALSE(parse_inequality("sinc(x) > 0 on [0, inf]").bounded());
  }

  TEST_CASE("print and reparse every catalog statement") {
    const Catalog& cat = builtin_catalog();
    for (const auto& r : cat.inequalities()) {
      CAPTURE(r.id);
      const InequalityStmt again = parse_inequality(r.dsl, cat.symbols());
      CHECK(structurally_equal(r.stmt, again));
      const std::string printed = to_string(r.stmt);
      CHECK(structurally_equal(r.stmt, parse_inequality(printed, cat.symbols())));
      CHECK(parse_expr(to_string(r.stmt.lhs), cat.symbols()) == r.stmt.lhs);
      CHECK(parse_expr(to_string(r.stmt.rhs), cat.symbols()) == r.stmt.rhs);
    }
    for (const auto& m : cat.monotone()) CHECK(parse_expr(to_string(m.function), cat.symbols()) == m.function);
  }

  TEST_CASE("evaluation examples") {
    const Catalog& cat = builtin_catalog();
    const Expr cusa = parse_expr("(cos(x)+2)/3 - sinc(x)");
    CHECK(eval_point(cusa, 0) == 0);
    const Interval s = eval_interval(parse_expr("sinc(x)"), Interval(0, constants::kHalfPiHi));
    CHECK(s.lo() <= 0.6366197723675813);
    CHECK(s.hi() >= 1);
    const Expr lower = parse_expr("(cos(x) + alpha - 1)/alpha", cat.symbols());
    const HighReal v = eval_point(lower, hp_pi() / 2);
    CHECK(abs(v - 2 / hp_pi()) < HighReal(1e-30));
    CHECK_THROWS_AS(eval_interval(parse_expr("1/x"), Interval(-1, 1)), PoleError);
    CHECK_THROWS_AS(eval_interval(parse_expr("log(x)"), Interval(-1, 1)), DomainError);
  }

  TEST_CASE("interval evaluation encloses point values on the catalog") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (const auto& [id, e] : catalog_expressions()) {
      CAPTURE(id);
      const Interval dom = domain_for(id);
      int evaluated = 0;
      for (int i = 0; i < 1000; ++i) {
        const double x = dom.lo() + (dom.hi() - dom.lo()) * u(rng);
        Interval v;
        HighReal p;
        try {
          v = eval_interval(e, Interval(x));
          p = eval_point(e, x);
        } catch (const Error&) {
          continue;
        }
        ++evaluated;
        CHECK(HighReal(v.lo()) <= p);
        CHECK(p <= HighReal(v.hi()));
      }
      CHECK(evaluated >= 990);
    }
  }

  TEST_CASE("derivative examples") {
    const Expr x = Expr::var();
    const Expr d = differentiate(Expr::pow_int(x, 2));
    CHECK(eval_interval(d, Interval(3)).contains(6.0));
    const Expr dc = differentiate(parse_expr("(cos(x) + 2)/3"));
    for (double t : {0.1, 0.7, 1.3}) {
      CHECK(abs(eval_point(dc, t) + sin(HighReal(t)) / 3) < HighReal(1e-30));
    }
    CHECK_THROWS_AS(differentiate(parse_expr("abs(x)"), Interval(-1, 1)), UnsupportedError);
    CHECK_NOTHROW(differentiate(parse_expr("abs(x)"), Interval(1, 2)));
  }

  TEST_CASE("derivatives match central differences on random expressions") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.1, 1.4);
    int checked = 0;
    for (int k = 0; k < 100; ++k) {
      const Expr e = random_expr(rng, 3);
      CAPTURE(to_string(e));
      const Expr d = differentiate(e);
      for (int i = 0; i < 10; ++i) {
        const double x = u(rng);
        CAPTURE(x);
        bool ok = false;
        try {
          ok = derivative_agrees(e, d, x);
        } catch (const Error&) {
          continue;
        }
        CHECK(ok);
        ++checked;
      }
    }
    CHECK(checked > 900);
  }

  TEST_CASE("derivatives match central differences on the catalog") {
    for (const auto& [id, e] : catalog_expressions()) {
      CAPTURE(id);
      const Interval dom = domain_for(id);
      const double lo = dom.lo() + 1e-3;
      const double hi = dom.hi() - 1e-3;
      const Expr d = differentiate(e);
      for (int i = 1; i <= 100; ++i) {
        const double x = lo + (hi - lo) * i / 101.0;
        CAPTURE(x);
        bool ok = false;
        try {
          ok = derivative_agrees(e, d, x);
        } catch (const Error&) {
          continue;
        }
        CHECK(ok);
      }
    }
  }

  TEST_CASE("derivative enclosure contains the central difference") {
    const Expr e = parse_expr("(inv_sinc2(x) - xcot(x))/(1 - xcot(x))");
    const Expr d = differentiate(e);
    for (double x : {0.2, 0.5, 1.0, 1.5}) {
      const Interval enc = eval_interval(d, Interval(x - 1e-9, x + 1e-9));
      const HighReal fd = central_difference(e, x, HighReal(1e-5));
      CHECK(HighReal(enc.lo()) - HighReal(1e-8) <= fd);
      CHECK(fd <= HighReal(enc.hi()) + HighReal(1e-8));
    }
  }

  TEST_CASE("exact Taylor coefficients at zero") {
    const auto c = taylor_at_zero(parse_expr("(cos(x) - 1)/(sinc(x) - 1)"), 2);
    CHECK(c[0] == Rational(3));
    CHECK(c[1].is_zero());
    const auto s = taylor_at_zero(parse_expr("sinc(x)"), 4);
    CHECK(s[2] == Rational(-1, 6));
    CHECK(s[4] == Rational(1, 120));
    CHECK_THROWS_AS(taylor_at_zero(parse_expr("1/x"), 2), PoleError);
  }
}
