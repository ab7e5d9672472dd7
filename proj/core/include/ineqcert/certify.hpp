#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqcert/expr.hpp"
#include "ineqcert/interval.hpp"

namespace ineqcert {

inline constexpr std::string_view kCertificateSchema = "ineqcert.certificate/v1";

struct SignConfig {
  int max_depth = 40;
  /// Radius of the exclusion neighbourhood around each sharpness point.
  double delta = 1e-3;
  /// Cell budget for the region outside exclusions.
  std::size_t max_cells = 400000;
  /// Cell budget for each shell inside an exclusion.
  std::size_t shell_cells = 4096;
  /// Number of halving shells tried on each side of a sharpness point.
  int max_shells = 40;
  /// Intersect the natural enclosure with first and second order Taylor forms when available.
  bool taylor_forms = true;
};

/// Default configuration, with max_depth taken from INEQCERT_MAX_DEPTH when set.
SignConfig default_sign_config();

enum class CertMode { kNonnegGlobal, kStrictOutsideSharp, kMonotone, kRefuted };
enum class CertStatus { kProven, kProvenOnTruncation, kRefuted, kInconclusive };
enum class CellRegion { kStrict, kExclusion, kResidual };

std::string_view to_string(CertMode m);
std::string_view to_string(CertStatus s);
std::string_view to_string(CellRegion r);

struct Cell {
  double lo = 0;
  double hi = 0;
  /// Proven enclosure of the certified expression; absent for residual cells.
  std::optional<Interval> enclosure;
  CellRegion region = CellRegion::kStrict;
  int depth = 0;
};

struct Exclusion {
  Interval point;
  double delta = 0;
};

struct Counterexample {
  double x = 0;
  /// Degenerate-interval enclosure of the certified expression at x; hi < 0.
  Interval value;
  std::optional<Interval> lhs;
  std::optional<Interval> rhs;
};

struct Certificate {
  std::string id;
  CertMode mode = CertMode::kNonnegGlobal;
  CertStatus status = CertStatus::kInconclusive;
  SignConfig config;
  /// The expression whose sign is certified (difference, or signed derivative).
  std::string expression;
  Interval domain;
  bool evenness_reduced = false;
  std::vector<Cell> cells;
  std::vector<Exclusion> exclusions;
  int depth = 0;
  std::optional<Counterexample> counterexample;
  std::optional<Cell> worst_cell;
  std::vector<std::string> notes;

  bool proven() const { return status == CertStatus::kProven || status == CertStatus::kProvenOnTruncation; }
};

/// Branch-and-bound sign certification of e over domain. Cells outside the
/// sharpness exclusions must satisfy lo > 0 when strict (or when sharp points
/// are given), lo >= 0 otherwise; inside exclusions lo >= 0 is attempted shell
/// by shell and whatever cannot be closed is reported as a residual cell.
/// Throws PoleError when e cannot be evaluated at the midpoint of a cell.
Certificate verify_sign(const Expr& e, const Interval& domain, const std::vector<Interval>& sharp,
                        const SignConfig& cfg, bool strict = true);

/// Enclosure of e over x used by verify_sign: the natural interval extension,
/// intersected with Taylor forms built from d1 = e' and d2 = e'' when given.
Interval cell_enclosure(const Expr& e, const std::optional<Expr>& d1, const std::optional<Expr>& d2,
                        const Interval& x);

struct RevalidationResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Offline check: cells tile the domain exactly, and re-evaluating e on every
/// non-residual cell reproduces the recorded sign conclusion.
RevalidationResult revalidate(const Certificate& cert, const Expr& e);

/// Limit of e at point: direct evaluation on the point enclosure, falling back
/// to exact Taylor coefficients for a removable 0/0 at x = 0.
Interval limit_at(const Expr& e, const Interval& point);

struct RootResult {
  Interval enclosure;
  HighReal estimate = 0;
};

/// Rigorous bisection. Requires certain opposite signs at the bracket ends
/// (BracketError otherwise). Stops at width <= tol, or earlier when the sign
/// at the midpoint cannot be decided.
RootResult find_root(const Expr& e, const Interval& bracket, double tol = 1e-12);

struct GapResult {
  double max_gap = 0;
  double argmax = 0;
  /// Rigorous enclosure of max |f - bound| over the domain.
  Interval refined;
};

GapResult gap_scan(const Expr& f, const Expr& bound, const Interval& domain, int grid_n = 4096);

struct ValueCheck {
  bool pass = false;
  Interval enclosure;
};

ValueCheck verify_value(const Expr& e, const Interval& point, const Interval& expected, double tol);

/// JSON text of a certificate (stable field order, no timings).
std::string certificate_json(const Certificate& cert);

/// Reads certificate_json output back; the hex fields make it exact.
/// Throws FormatError on malformed input.
Certificate certificate_from_json(const std::string& text);

/// Shortest round-trip decimal and hex-float spellings of a double.
std::string shortest_decimal(double x);
std::string hex_float(double x);

}  // namespace ineqcert
