#include <doctest.h>

#include <random>

#include <boost/math/constants/constants.hpp>

#include "ineqcert/errors.hpp"
#include "ineqcert/interval.hpp"
#include "ineqcert/primitives.hpp"
#include "oracle.hpp"

using namespace ineqcert;
using oracle::Q;

namespace {

bool encloses(const Interval& v, const Q& t) { return Q(v.lo()) <= t && t <= Q(v.hi()); }

struct ElemCase {
  Func f;
  double lo;
  double hi;
};

const std::vector<ElemCase>& elem_cases() {
  static const std::vector<ElemCase> cases = {
      {Func::kSin, -12, 12}, {Func::kCos, -12, 12},  {Func::kSinh, -20, 20}, {Func::kCosh, -20, 20},
      {Func::kTanh, -20, 20}, {Func::kExp, -30, 30}, {Func::kLog, 1e-6, 100}, {Func::kSqrt, 0, 100},
      {Func::kAbs, -5, 5},
  };
  return cases;
}

Interval apply(Func f, const Interval& a) {
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
  return a;
}

struct PrimCase {
  Primitive p;
  double lim;
};

const std::vector<PrimCase>& prim_cases() {
  static const std::vector<PrimCase> cases = {
      {Primitive::kSinc, 12},   {Primitive::kXcot, 3.1},    {Primitive::kSinhc, 20},  {Primitive::kXcoth, 20},
      {Primitive::kInvSinc2, 3.1}, {Primitive::kInvSinhc2, 20}, {Primitive::kDsinc, 12}, {Primitive::kDsinhc, 20},
      {Primitive::kD2sinc, 12}, {Primitive::kD2sinhc, 20},
  };
  return cases;
}

// Random interval inside [lo, hi] with a log-uniform width, plus a point in it.
std::pair<Interval, double> random_box(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(0, 1);
  const double w = std::min(hi - lo, std::pow(10.0, -12 + 12 * u(rng)));
  const double a = lo + (hi - lo - w) * u(rng);
  const double b = std::min(hi, a + w);
  double x = a + (b - a) * u(rng);
  if (u(rng) < 0.05) x = a;
  if (u(rng) < 0.05) x = b;
  return {Interval(a, b), std::clamp(x, a, b)};
}

}  // namespace

TEST_SUITE("interval") {
  TEST_CASE("arithmetic examples") {
    CHECK((Interval(1, 2) + Interval(3, 4)).contains(Interval(4, 6)));
    CHECK((Interval(-1, 2) * Interval(3, 4)).contains(Interval(-4, 8)));
    CHECK(pow_int(Interval(-2, 1), 2).contains(Interval(0, 4)));
    CHECK(pow_int(Interval(-2, 1), 2).lo() <= 0.0);
    CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), PoleError);
    const Interval third = Interval(1) / Interval(3);
    CHECK(encloses(third, Q(1) / 3));
    CHECK(third.width() > 0);
  }

  TEST_CASE("elementary function examples") {
    const Interval c = cos(Interval(0, constants::kHalfPiHi));
    CHECK(c.contains(Interval(0, 1)));
    CHECK(c.lo() >= -1e-15);
    CHECK(c.hi() <= 1 + 1e-15);
    CHECK(sin(Interval(0, constants::kPiHi)).hi() >= 1);
    CHECK(exp(Interval(0)).contains(1.0));
    CHECK(cos(Interval(3, 3.5)).lo() == -1);
    CHECK_THROWS_AS(log(Interval(-1, 1)), DomainError);
    CHECK_THROWS_AS(sqrt(Interval(-1, 1)), DomainError);
  }

  TEST_CASE("real power with a base touching zero") {
    const Interval third(1.0 / 3);
    const Interval p = pow_real(Interval(0, 0.125), third);
    CHECK(p.lo() == 0);
    CHECK(encloses(p, pow(Q(0.125), 1 / Q(3))));
    CHECK(p.hi() <= 0.5 + 1e-14);
    const Interval q = pow_real(Interval(0, 8), Interval(0.5, 2));
    CHECK(encloses(q, Q(64)));
    CHECK(encloses(q, Q(0)));
    CHECK_THROWS_AS(pow_real(Interval(0, 1), Interval(-0.5)), DomainError);
    CHECK_THROWS_AS(pow_real(Interval(0, 1), Interval(0)), DomainError);
    CHECK_THROWS_AS(pow_real(Interval(-1, 1), third), DomainError);
  }

  TEST_CASE("primitive examples") {
    const Interval s0 = primitive(Primitive::kSinc, Interval(0));
    CHECK(s0.contains(1.0));
    CHECK(s0.width() <= 1e-14);
    CHECK(encloses(primitive(Primitive::kSinc, constants::kHalfPi), 2 / boost::math::constants::pi<Q>()));
    const Interval xc = primitive(Primitive::kXcot, constants::kHalfPi);
    CHECK(xc.contains(0.0));
    CHECK(xc.width() <= 1e-12);
    CHECK_THROWS_AS(primitive(Primitive::kXcot, Interval(3, 3.2)), DomainError);
    CHECK_THROWS_AS(primitive(Primitive::kInvSinc2, Interval(-4, -3)), DomainError);
  }

  TEST_CASE("fuzz containment of elementary functions and primitives") {
    std::mt19937_64 rng(0xC0FFEE);
    std::size_t violations = 0;
    constexpr int kSamples = 100000;
    const auto& ec = elem_cases();
    const auto& pc = prim_cases();
    const std::size_t kinds = ec.size() + pc.size();
    for (int i = 0; i < kSamples; ++i) {
      const std::size_t k = static_cast<std::size_t>(i) % kinds;
      if (k < ec.size()) {
        const auto [box, x] = random_box(rng, ec[k].lo, ec[k].hi);
        if (!encloses(apply(ec[k].f, box), oracle::fn(ec[k].f, Q(x)))) {
          ++violations;
          MESSAGE(name(ec[k].f) << " at " << x << " box " << to_string(box));
        }
      } else {
        const auto& c = pc[k - ec.size()];
        const auto [box, x] = random_box(rng, -c.lim, c.lim);
        if (!encloses(primitive(c.p, box), oracle::prim(c.p, Q(x)))) {
          ++violations;
          MESSAGE(name(c.p) << " at " << x << " box " << to_string(box));
        }
      }
    }
    CHECK(violations == 0);
  }

  TEST_CASE("fuzz containment of arithmetic") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> op(0, 5);
    std::size_t violations = 0;
    for (int i = 0; i < 20000; ++i) {
      const auto [a, x] = random_box(rng, -1e3, 1e3);
      const auto [b, y] = random_box(rng, -1e3, 1e3);
      const Q qx(x), qy(y);
      switch (op(rng)) {
        case 0: violations += !encloses(a + b, qx + qy); break;
        case 1: violations += !encloses(a - b, qx - qy); break;
        case 2: violations += !encloses(a * b, qx * qy); break;
        case 3:
          if (!b.contains_zero()) violations += !encloses(a / b, qx / qy);
          break;
        case 4: violations += !encloses(pow_int(a, 3), qx * qx * qx); break;
        case 5: violations += !encloses(-a, -qx); break;
      }
    }
    CHECK(violations == 0);
  }

  TEST_CASE("inclusion monotonicity") {
    std::mt19937_64 rng(5);
    for (const auto& c : prim_cases()) {
      for (int i = 0; i < 300; ++i) {
        const auto [outer, x] = random_box(rng, -std::min(c.lim, 3.0), std::min(c.lim, 3.0));
        const Interval inner(x, std::min(outer.hi(), x + (outer.hi() - x) / 2));
        CHECK(primitive(c.p, outer).contains(primitive(c.p, inner)));
      }
    }
    for (const auto& c : elem_cases()) {
      for (int i = 0; i < 300; ++i) {
        const auto [outer, x] = random_box(rng, c.lo, c.hi);
        CHECK(apply(c.f, outer).contains(apply(c.f, Interval(x))));
      }
    }
  }

  TEST_CASE("width convergence for sinc and xcot") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 50; ++i) {
      const double m = u(rng);
      for (Primitive p : {Primitive::kSinc, Primitive::kXcot}) {
        double prev = HUGE_VAL;
        for (double h : {1e-1, 1e-3, 1e-5, 1e-7, 1e-9}) {
          const double w = primitive(p, Interval(m - h, m + h)).width();
          CHECK(w <= prev);
          prev = w;
        }
        CHECK(prev < 1e-8);
      }
    }
  }

  TEST_CASE("series and quotient branches agree near the crossover") {
    for (const auto& c : prim_cases()) {
      for (double x : {0.55, 0.65, 0.7, 0.75, 0.9}) {
        const Interval a(x, x + 1e-3);
        const Interval s = primitive_series_branch(c.p, a, default_primitive_options());
        const Interval q = primitive_quotient_branch(c.p, a);
        CHECK(s.intersect(q).has_value());
      }
    }
  }
}
