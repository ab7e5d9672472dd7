#pragma once

#include <string>
#include <vector>

#include "ineqcert/catalog.hpp"
#include "ineqcert/certify.hpp"

namespace ineqcert {

/// Default compact domain for unbounded user statements.
inline constexpr double kDefaultTruncation = 20.0;

/// Certifies one inequality record: forms the difference, applies truncation
/// and evenness reduction, then runs verify_sign. The record's own exclusion
/// radius replaces cfg.delta unless honour_record_delta is false.
Certificate verify_inequality(const InequalityRecord& rec, const SignConfig& cfg, bool honour_record_delta = true);

/// Status the record is expected to reach.
CertStatus expected_status(const InequalityRecord& rec);

/// True when e(-x) agrees with e(x) at sample points of (0, b].
bool looks_even(const Expr& e, double b);

struct MonotoneResult {
  Certificate certificate;
  Interval left_limit;
  Interval right_limit;
  bool left_ok = false;
  bool right_ok = false;
  /// Certificate proven and both limits match.
  bool ok() const { return certificate.proven() && left_ok && right_ok; }
};

/// Certifies the sign of the derivative on the domain shrunk inward by
/// delta_end and compares endpoint limits with the record within 1e-9.
MonotoneResult verify_monotone(const MonotoneRecord& rec, const SignConfig& cfg);

struct GapOutcome {
  GapResult scan;
  /// Set for pointwise claims.
  std::optional<Certificate> certificate;
  bool pass = false;
};

GapOutcome check_gap(const GapClaim& claim, const SignConfig& cfg);

struct RunEntry {
  std::string id;
  std::string kind;
  CertStatus status = CertStatus::kInconclusive;
  CertStatus expected = CertStatus::kProven;
  bool ok = false;
  std::size_t cells = 0;
  int depth = 0;
  double seconds = 0;
  std::string detail;
  Certificate certificate;
};

struct RunReport {
  std::string tool_version;
  std::vector<RunEntry> entries;
  bool all_ok() const;
};

/// Verifies every inequality and monotone record. Records are distributed over
/// `jobs` threads; the report keeps catalog order.
RunReport run_all(const Catalog& catalog, const SignConfig& cfg, int jobs = 1);

/// JSON text of a run report; timings are included only when asked for.
std::string report_json(const RunReport& report, bool with_timings);

}  // namespace ineqcert
