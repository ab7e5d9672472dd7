#include <doctest.h>

#include "ineqcert/catalog.hpp"
#include "ineqcert/series.hpp"
#include "ineqcert/verify.hpp"
#include "support.hpp"

using namespace ineqcert;

namespace {

Monotonicity ratio_kind(bool tilde) {
  std::vector<Rational> a, c;
  for (int n = 1; n <= 100; ++n) {
    const Rational b = bernoulli_even(n, 128).abs();
    const Rational f(factorial(2 * n), mpz_class(1));
    const Rational p = pow(Rational(2), 2 * n);
    if (tilde) {
      a.push_back(Rational(2) * (p - Rational(1)) * b / f);
      c.push_back((p - Rational(2)) * b / f);
    } else {
      a.push_back(Rational(2 * n) * p * b / f);
      c.push_back(p * b / f);
    }
  }
  return ratio_monotone(a, c, 100).kind;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("monotone records are certified with matching limits") {
    for (const auto& m : builtin_catalog().monotone()) {
      CAPTURE(m.id);
      const MonotoneResult r = verify_monotone(m, default_sign_config());
      CHECK(r.certificate.status == CertStatus::kProven);
      CHECK(r.certificate.mode == CertMode::kMonotone);
      CHECK(r.left_ok);
      CHECK(r.right_ok);
      CHECK(support::tiles_exactly(r.certificate));
      Expr d = differentiate(m.function);
      if (m.direction == Direction::kDecreasing) d = -d;
      CHECK(revalidate(r.certificate, d).ok);
    }
  }

  TEST_CASE("limits of f1 and f6 within 1e-9") {
    const Catalog& cat = builtin_catalog();
    const auto& f1 = cat.get_monotone("mono_f1");
    const auto& f6 = cat.get_monotone("mono_f6");
    const Interval pi = constants::kPi;
    const auto near = [](const Interval& v, const Interval& t) {
      return v.lo() >= t.lo() - 1e-9 && v.hi() <= t.hi() + 1e-9;
    };
    CHECK(near(limit_at(f1.function, f1.lo), Interval(2.0)));
    CHECK(near(limit_at(f1.function, f1.hi), pi * pi / Interval(4)));
    CHECK(near(limit_at(f6.function, f6.lo), Interval(3.0)));
    CHECK(near(limit_at(f6.function, f6.hi), pi / (pi - Interval(2))));
  }

  TEST_CASE("monotone certificates agree with coefficient-ratio evidence") {
    const Catalog& cat = builtin_catalog();
    const auto& f1 = cat.get_monotone("mono_f1");
    const auto& f6 = cat.get_monotone("mono_f6");
    CHECK(f1.direction == Direction::kIncreasing);
    CHECK(ratio_kind(false) == Monotonicity::kIncreasing);
    CHECK(f6.direction == Direction::kDecreasing);
    CHECK(ratio_kind(true) == Monotonicity::kDecreasing);
  }

  TEST_CASE("roots and claimed values") {
    const Catalog& cat = builtin_catalog();
    for (const auto& r : cat.roots()) {
      CAPTURE(r.id);
      const RootResult root = find_root(r.expr, r.bracket);
      CHECK(root.enclosure.lo() >= r.paper_value - r.tolerance);
      CHECK(root.enclosure.hi() <= r.paper_value + r.tolerance);
    }
    for (const auto& v : cat.values()) {
      CAPTURE(v.id);
      CHECK(verify_value(v.expr, v.point, v.expected, v.tolerance).pass);
    }
  }

  TEST_CASE("selected gap claims") {
    const Catalog& cat = builtin_catalog();
    for (const auto& g : cat.gaps()) {
      if (g.id != "gap_thm1_lower" && g.id != "gap_thm2_upper_x2" && g.id != "gap_newineq2") continue;
      CAPTURE(g.id);
      const GapOutcome out = check_gap(g, default_sign_config());
      CHECK(out.pass);
      CHECK(out.scan.refined.lo() <= out.scan.max_gap);
      CHECK(out.scan.max_gap <= out.scan.refined.hi());
      if (g.kind == GapKind::kBelowXSquared) {
        REQUIRE(out.certificate);
        CHECK(support::tiles_exactly(*out.certificate));
      }
    }
  }

  TEST_CASE("record delta override") {
    const auto& rec = builtin_catalog().get("yang");
    REQUIRE(rec.delta);
    const Certificate own = verify_inequality(rec, default_sign_config());
    REQUIRE(own.exclusions.size() == 1);
    CHECK(own.exclusions[0].delta == *rec.delta);
    SignConfig cfg = default_sign_config();
    cfg.delta = 0.1;
    const Certificate forced = verify_inequality(rec, cfg, false);
    REQUIRE(forced.exclusions.size() == 1);
    CHECK(forced.exclusions[0].delta == 0.1);
  }

  TEST_CASE("evenness reduction") {
    const auto& rec = builtin_catalog().get("cusa_upper");
    const Certificate c = verify_inequality(rec, default_sign_config());
    CHECK(c.evenness_reduced);
    CHECK(c.domain.lo() == 0);
    CHECK(looks_even(rec.stmt.difference(), 1.5));
    CHECK_FALSE(looks_even(parse_expr("x + cos(x)"), 1.5));
  }

  TEST_CASE("report JSON omits timings unless asked") {
    RunReport rep;
    rep.tool_version = "t";
    RunEntry e;
    e.id = "a";
    e.kind = "inequality";
    e.seconds = 1.5;
    e.ok = true;
    rep.entries.push_back(e);
    CHECK(report_json(rep, false).find("seconds") == std::string::npos);
    CHECK(report_json(rep, true).find("seconds") != std::string::npos);
    CHECK(report_json(rep, false).find("ineqcert.report/v1") != std::string::npos);
  }
}
