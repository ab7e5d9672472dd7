#include <doctest.h>

#include "ineqcert/catalog.hpp"
#include "ineqcert/certify.hpp"
#include "ineqcert/errors.hpp"
#include "ineqcert/verify.hpp"
#include "support.hpp"

using namespace ineqcert;

namespace {

const ConstantTable& syms() { return catalog_constants(); }
Expr px(const char* s) { return parse_expr(s, syms()); }

}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("cusa difference is proven strictly outside the sharp point") {
    const Expr e = px("(cos(x)+2)/3 - sinc(x)");
    const Interval dom(0, constants::kHalfPiHi);
    const Certificate c = verify_sign(e, dom, {Interval(0.0)}, default_sign_config());
    CHECK(c.status == CertStatus::kProven);
    CHECK(c.mode == CertMode::kStrictOutsideSharp);
    CHECK(support::tiles_exactly(c));
    REQUIRE(c.exclusions.size() == 1);
    CHECK(c.exclusions[0].delta == doctest::Approx(1e-3));
    for (const auto& cell : c.cells) {
      if (cell.region == CellRegion::kStrict) {
        REQUIRE(cell.enclosure);
        CHECK(cell.enclosure->lo() > 0);
      } else if (cell.region == CellRegion::kExclusion) {
        REQUIRE(cell.enclosure);
        CHECK(cell.enclosure->lo() >= 0);
        CHECK(cell.hi <= 1e-3 + 1e-15);
      }
    }
    CHECK(revalidate(c, e).ok);
  }

  TEST_CASE("constant is proven with a single cell") {
    const Certificate c = verify_sign(px("1"), Interval(0, 1), {}, default_sign_config());
    CHECK(c.status == CertStatus::kProven);
    CHECK(c.cells.size() == 1);
    CHECK(c.depth == 0);
  }

  TEST_CASE("x - 1 is refuted near zero") {
    const Certificate c = verify_sign(px("x - 1"), Interval(0, 2), {}, default_sign_config());
    CHECK(c.status == CertStatus::kRefuted);
    CHECK(c.mode == CertMode::kRefuted);
    REQUIRE(c.counterexample);
    CHECK(c.counterexample->value.hi() < 0);
    CHECK(c.counterexample->x < 1);
    const Interval again = eval_interval(px("x - 1"), Interval(c.counterexample->x));
    CHECK(again.hi() < 0);
    CHECK(revalidate(c, px("x - 1")).ok);
  }

  TEST_CASE("zero function is proven non-strictly and inconclusive strictly") {
    const SignConfig cfg = default_sign_config();
    CHECK(verify_sign(px("x - x"), Interval(0, 1), {}, cfg, false).status == CertStatus::kProven);
    SignConfig small = cfg;
    small.max_depth = 8;
    const Certificate c = verify_sign(px("x - x"), Interval(0, 1), {}, small, true);
    CHECK(c.status == CertStatus::kInconclusive);
    CHECK(c.worst_cell.has_value());
  }

  TEST_CASE("pole inside the domain is an error") {
    CHECK_THROWS_AS(verify_sign(px("1/x"), Interval(-1, 1), {}, default_sign_config()), PoleError);
  }

  TEST_CASE("overlapping exclusions are rejected") {
    CHECK_THROWS_AS(
        verify_sign(px("x^2"), Interval(-1, 1), {Interval(0.0), Interval(1e-4)}, default_sign_config(), false),
        DomainError);
  }

  TEST_CASE("certificates are deterministic and round-trip through JSON") {
    const Catalog& cat = builtin_catalog();
    for (const char* id : {"thm1_upper", "wilker", "newineq1_converse", "yang"}) {
      CAPTURE(id);
      const auto& rec = cat.get(id);
      const Certificate a = verify_inequality(rec, default_sign_config());
      const Certificate b = verify_inequality(rec, default_sign_config());
      CHECK(certificate_json(a) == certificate_json(b));
      CHECK(a.depth == b.depth);
      const Certificate back = certificate_from_json(certificate_json(a));
      CHECK(certificate_json(back) == certificate_json(a));
      CHECK(back.cells.size() == a.cells.size());
      CHECK(revalidate(back, rec.stmt.difference()).ok);
    }
    CHECK_THROWS_AS(certificate_from_json("{\"schema\": 1"), FormatError);
    CHECK_THROWS_AS(certificate_from_json("{\"schema\": \"other\"}"), FormatError);
  }

  TEST_CASE("revalidation rejects tampered certificates") {
    const Expr e = px("(cos(x)+2)/3 - sinc(x)");
    const Certificate good = verify_sign(e, Interval(0, 1), {Interval(0.0)}, default_sign_config());
    REQUIRE(revalidate(good, e).ok);

    Certificate gap = good;
    gap.cells.erase(gap.cells.begin() + static_cast<long>(gap.cells.size() / 2));
    CHECK_FALSE(revalidate(gap, e).ok);

    Certificate wrong = good;
    CHECK_FALSE(revalidate(wrong, px("sinc(x) - (cos(x)+2)/3")).ok);
  }

  TEST_CASE("limits at endpoints") {
    CHECK(limit_at(px("(cos(x) - 1)/(sinc(x) - 1)"), Interval(0.0)).contains(3.0));
    CHECK(limit_at(px("sinc(x)"), Interval(0.0)).contains(1.0));
    const Interval f1 = limit_at(px("(inv_sinc2(x) - xcot(x))/(1 - xcot(x))"), constants::kHalfPi);
    const Interval target = constants::kPi * constants::kPi / Interval(4);
    CHECK(f1.overlaps(target));
    CHECK(f1.width() < 1e-9);
    const Interval f1_0 = limit_at(px("(inv_sinc2(x) - xcot(x))/(1 - xcot(x))"), Interval(0.0));
    CHECK(f1_0.contains(2.0));
    CHECK_THROWS(limit_at(px("1/x"), Interval(0.0)));
  }

  TEST_CASE("roots") {
    const RootResult x0 = find_root(px("(alpha - 1)/2 - sinc(x)"), Interval(0.5, 1.2), 1e-12);
    CHECK(x0.enclosure.lo() >= 0.8795 - 5e-4);
    CHECK(x0.enclosure.hi() <= 0.8795 + 5e-4);
    CHECK(x0.enclosure.width() <= 1e-11);
    const RootResult x1 = find_root(px("(alpha-1)*(sin(x) - x*cos(x)) + sin(x)*cos(x) - x"), Interval(1.0, 1.4));
    CHECK(x1.enclosure.lo() >= 1.1559 - 5e-4);
    CHECK(x1.enclosure.hi() <= 1.1559 + 5e-4);
    const RootResult half = find_root(px("x - 1/2"), Interval(0, 1), 1e-12);
    CHECK(half.enclosure.contains(0.5));
    CHECK(half.enclosure.width() <= 1e-12);
    CHECK_THROWS_AS(find_root(px("x + 1"), Interval(0, 1)), BracketError);
  }

  TEST_CASE("gap scan") {
    const GapResult g = gap_scan(px("sinc(x)"), px("(cos(x)+2)/3"), Interval(0, constants::kHalfPiHi));
    CHECK(g.refined.hi() < 0.031);
    CHECK(g.refined.contains(g.max_gap) == true);
    const GapResult z = gap_scan(px("sinc(x)"), px("sinc(x)"), Interval(0, 1));
    CHECK(z.max_gap == 0);
    CHECK(z.refined.lo() == 0);
    CHECK(z.refined.hi() <= 1e-12);
  }

  TEST_CASE("claimed values") {
    const ValueCheck v = verify_value(px("(alpha - 1)/sinc(x) + xcot(x)"), Interval(1.15588639491797), Interval(2.7219),
                                      5e-4);
    CHECK(v.pass);
    CHECK_FALSE(verify_value(px("x"), Interval(1.0), Interval(1.1), 1e-3).pass);
  }

  TEST_CASE("constant function has no strict monotone certificate") {
    MonotoneRecord rec;
    rec.id = "flat";
    rec.function = px("2 + 0*x");
    rec.function_text = "2 + 0*x";
    rec.lo = Interval(0.0);
    rec.hi = Interval(1.0);
    rec.left_limit = Interval(2.0);
    rec.right_limit = Interval(2.0);
    SignConfig cfg = default_sign_config();
    cfg.max_depth = 10;
    const MonotoneResult r = verify_monotone(rec, cfg);
    CHECK(r.certificate.status == CertStatus::kInconclusive);
    CHECK(r.left_ok);
    CHECK_FALSE(r.ok());
  }
}
