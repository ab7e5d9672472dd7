#include "ineqcert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include <nlohmann/json.hpp>

#include "ineqcert/errors.hpp"
#include "ineqcert/version.hpp"

namespace ineqcert {

bool looks_even(const Expr& e, double b) {
  constexpr int kSamples = 16;
  const HighReal tol = HighReal(1e-24);
  int compared = 0;
  for (int i = 1; i <= kSamples; ++i) {
    const HighReal x = HighReal(b) * i / (kSamples + 1);
    try {
      const HighReal a = eval_point(e, x);
      const HighReal c = eval_point(e, -x);
      if (boost::multiprecision::abs(a - c) > tol * (1 + boost::multiprecision::abs(a))) return false;
      ++compared;
    } catch (const Error&) {
    }
  }
  return compared > 0;
}

CertStatus expected_status(const InequalityRecord& rec) {
  if (rec.truncation || !rec.stmt.bounded()) return CertStatus::kProvenOnTruncation;
  return CertStatus::kProven;
}

Certificate verify_inequality(const InequalityRecord& rec, const SignConfig& base, bool honour_record_delta) {
  SignConfig cfg = base;
  if (honour_record_delta && rec.delta) cfg.delta = *rec.delta;
  const InequalityStmt& s = rec.stmt;
  const Expr e = s.difference();
  std::vector<std::string> notes;

  // Stated domain as an outward enclosure; infinite ends stay infinite.
  const double stated_lo = s.lo.infinite ? -HUGE_VAL : s.lo.enclosure.lo();
  const double stated_hi = s.hi.infinite ? HUGE_VAL : s.hi.enclosure.hi();
  const bool symmetric = (s.lo.infinite && s.hi.infinite) ||
                         (!s.lo.infinite && !s.hi.infinite && s.lo.enclosure.lo() == -s.hi.enclosure.hi() &&
                          s.lo.enclosure.hi() == -s.hi.enclosure.lo());

  bool truncated = false;
  double lo = stated_lo;
  double hi = stated_hi;
  if (rec.truncation) {
    lo = rec.truncation->lo.lo();
    hi = rec.truncation->hi.hi();
    truncated = true;
    notes.push_back("certified on the truncation [" + rec.truncation->lo_text + ", " + rec.truncation->hi_text + "]");
  } else if (!s.bounded()) {
    lo = std::isinf(lo) ? -kDefaultTruncation : lo;
    hi = std::isinf(hi) ? kDefaultTruncation : hi;
    truncated = true;
    notes.push_back("unbounded domain certified on [" + shortest_decimal(lo) + ", " + shortest_decimal(hi) + "]");
  }

  bool even = false;
  if (symmetric && hi > 0 && looks_even(e, std::min(hi, 4.0))) {
    even = true;
    if (lo < 0) lo = 0;
  } else if (symmetric && lo >= 0 && stated_lo < 0) {
    notes.push_back("difference is not even; the negative half of the stated domain is not covered");
  }

  std::vector<Interval> sharp;
  for (const auto& p : s.sharp_points) {
    const Interval& q = p.enclosure;
    if (q.hi() < lo || q.lo() > hi) continue;  // mirrored by evenness or cut by the truncation
    sharp.push_back(q);
  }

  Certificate cert = verify_sign(e, Interval(lo, hi), sharp, cfg, is_strict(s.relation));
  cert.id = rec.id;
  cert.evenness_reduced = even;
  if (even) cert.notes.push_back("even difference; certified on the non-negative half");
  cert.notes.insert(cert.notes.end(), notes.begin(), notes.end());
  if (rec.expected == Expected::kSuspectedTypo) cert.notes.push_back("suspected typo: " + rec.notes);
  if (cert.status == CertStatus::kProven && truncated) cert.status = CertStatus::kProvenOnTruncation;
  if (cert.counterexample) {
    const Interval x(cert.counterexample->x);
    try {
      cert.counterexample->lhs = eval_interval(s.lhs, x);
      cert.counterexample->rhs = eval_interval(s.rhs, x);
    } catch (const Error&) {
    }
  }
  return cert;
}

namespace {

bool within(const Interval& value, const Interval& expected, double tol) {
  const Interval window = Interval((Interval(expected.lo()) - Interval(tol)).lo(), (Interval(expected.hi()) + Interval(tol)).hi());
  return window.contains(value);
}

}  // namespace

MonotoneResult verify_monotone(const MonotoneRecord& rec, const SignConfig& cfg) {
  constexpr double kLimitTol = 1e-9;
  MonotoneResult r;
  Expr d = differentiate(rec.function);
  if (rec.direction == Direction::kDecreasing) d = -d;
  const double lo = (Interval(rec.lo.hi()) + Interval(rec.delta_end)).hi();
  const double hi = (Interval(rec.hi.lo()) - Interval(rec.delta_end)).lo();
  r.certificate = verify_sign(d, Interval(lo, hi), {}, cfg, true);
  r.certificate.id = rec.id;
  if (r.certificate.status != CertStatus::kRefuted) r.certificate.mode = CertMode::kMonotone;
  r.certificate.notes.push_back(std::string("sign of the derivative; function ") + std::string(to_string(rec.direction)) +
                                " on [" + rec.lo_text + ", " + rec.hi_text + "] shrunk by " +
                                shortest_decimal(rec.delta_end));
  try {
    r.left_limit = limit_at(rec.function, rec.lo);
    r.left_ok = within(r.left_limit, rec.left_limit, kLimitTol);
  } catch (const Error& err) {
    r.certificate.notes.push_back(std::string("left limit failed: ") + err.what());
  }
  try {
    r.right_limit = limit_at(rec.function, rec.hi);
    r.right_ok = within(r.right_limit, rec.right_limit, kLimitTol);
  } catch (const Error& err) {
    r.certificate.notes.push_back(std::string("right limit failed: ") + err.what());
  }
  return r;
}

GapOutcome check_gap(const GapClaim& claim, const SignConfig& cfg) {
  GapOutcome out;
  const Interval domain(claim.lo.lo(), claim.hi.hi());
  out.scan = gap_scan(claim.f, claim.bound, domain);
  switch (claim.kind) {
    case GapKind::kBelow: out.pass = out.scan.refined.hi() < claim.paper_upper; break;
    case GapKind::kBetween:
      out.pass = claim.paper_lower <= out.scan.refined.lo() && out.scan.refined.hi() <= claim.paper_upper;
      break;
    case GapKind::kBelowXSquared: {
      const Expr x = Expr::var();
      const Expr e = Expr::sub(Expr::pow_int(x, 2), Expr::fn(Func::kAbs, Expr::sub(claim.f, claim.bound)));
      Certificate c = verify_sign(e, domain, {Interval(0.0)}, cfg, false);
      c.id = claim.id;
      out.pass = c.proven();
      out.certificate = std::move(c);
      break;
    }
  }
  return out;
}

bool RunReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const RunEntry& e) { return e.ok; });
}

RunReport run_all(const Catalog& catalog, const SignConfig& cfg, int jobs) {
  const auto& ineqs = catalog.inequalities();
  const auto& monos = catalog.monotone();
  const std::size_t total = ineqs.size() + monos.size();
  RunReport report;
  report.tool_version = std::string(kVersion);
  report.entries.resize(total);

  auto work = [&](std::size_t i) {
    RunEntry& entry = report.entries[i];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (i < ineqs.size()) {
        const auto& rec = ineqs[i];
        entry.id = rec.id;
        entry.kind = "inequality";
        entry.expected = expected_status(rec);
        entry.certificate = verify_inequality(rec, cfg);
        entry.status = entry.certificate.status;
        entry.ok = entry.status == entry.expected;
      } else {
        const auto& rec = monos[i - ineqs.size()];
        entry.id = rec.id;
        entry.kind = "monotone";
        entry.expected = CertStatus::kProven;
        MonotoneResult m = verify_monotone(rec, cfg);
        entry.status = m.certificate.status;
        entry.ok = m.ok();
        if (!m.left_ok || !m.right_ok) {
          entry.detail = "limits " + to_string(m.left_limit) + ", " + to_string(m.right_limit) + " do not match";
        }
        entry.certificate = std::move(m.certificate);
      }
      entry.cells = entry.certificate.cells.size();
      entry.depth = entry.certificate.depth;
    } catch (const Error& err) {
      entry.status = CertStatus::kInconclusive;
      entry.ok = false;
      entry.detail = err.what();
    }
    entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  const int n_threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(total, 1)));
  if (n_threads == 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return report;
}

std::string report_json(const RunReport& report, bool with_timings) {
  nlohmann::ordered_json j;
  j["schema"] = "ineqcert.report/v1";
  j["tool_version"] = report.tool_version;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json r{{"id", e.id},     {"kind", e.kind},   {"status", to_string(e.status)},
                             {"expected", to_string(e.expected)}, {"ok", e.ok}, {"cells", e.cells},
                             {"depth", e.depth}};
    if (!e.detail.empty()) r["detail"] = e.detail;
    if (with_timings) r["seconds"] = e.seconds;
    records.push_back(r);
  }
  j["records"] = records;
  j["all_ok"] = report.all_ok();
  return j.dump(2);
}

}  // namespace ineqcert
