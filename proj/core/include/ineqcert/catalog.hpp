#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqcert/expr.hpp"
#include "ineqcert/interval.hpp"

namespace ineqcert {

struct Citation {
  std::string location;
  /// Verbatim excerpt of the paper source.
  std::string quote;
};

enum class Expected { kProvable, kProvableOnTruncation, kSuspectedTypo };
enum class Section { kSec1, kSec2, kSec3 };

std::string_view to_string(Expected e);
std::string_view to_string(Section s);
std::optional<Section> section_from_name(std::string_view s);

struct Truncation {
  std::string lo_text;
  std::string hi_text;
  Interval lo;
  Interval hi;
};

struct InequalityRecord {
  std::string id;
  std::string dsl;
  InequalityStmt stmt;
  Citation citation;
  Expected expected = Expected::kProvable;
  /// Compact domain actually certified when the stated one is unbounded or too wide.
  std::optional<Truncation> truncation;
  Section section = Section::kSec1;
  std::string notes;
  /// Per-record sharpness exclusion radius.
  std::optional<double> delta;
  bool user_supplied = false;
};

struct ConstantRecord {
  std::string id;
  /// Symbol usable in DSL text.
  std::string symbol;
  std::string definition;
  double decimal_reference = 0;
  Citation citation;
  std::string notes;
  /// Allowed |computed - decimal_reference|.
  double tolerance = 1e-5;
  Interval enclosure;
  HighReal value = 0;
};

enum class Direction { kIncreasing, kDecreasing };
std::string_view to_string(Direction d);

struct MonotoneRecord {
  std::string id;
  std::string function_text;
  Expr function;
  std::string lo_text;
  std::string hi_text;
  Interval lo;
  Interval hi;
  Direction direction = Direction::kIncreasing;
  /// Limits of the function at the left and right end of the domain.
  std::string left_limit_text;
  std::string right_limit_text;
  Interval left_limit;
  Interval right_limit;
  /// Inward shrink of the domain before the derivative sign is certified.
  double delta_end = 1e-6;
  Citation citation;
  std::string notes;
};

enum class GapKind {
  /// max |f - bound| < upper
  kBelow,
  /// lower <= max |f - bound| <= upper
  kBetween,
  /// |f - bound| <= x^2 pointwise
  kBelowXSquared,
};

struct GapClaim {
  std::string id;
  std::string f_text;
  std::string bound_text;
  Expr f;
  Expr bound;
  std::string lo_text;
  std::string hi_text;
  Interval lo;
  Interval hi;
  GapKind kind = GapKind::kBelow;
  double paper_lower = 0;
  double paper_upper = 0;
  Citation citation;
};

struct RootRecord {
  std::string id;
  std::string expr_text;
  Expr expr;
  Interval bracket;
  double paper_value = 0;
  double tolerance = 0;
  Citation citation;
};

/// A claimed value of an expression at a point.
struct ValueRecord {
  std::string id;
  std::string expr_text;
  Expr expr;
  std::string point_text;
  Interval point;
  std::string expected_text;
  Interval expected;
  double tolerance = 0;
  Citation citation;
};

class Catalog {
 public:
  const std::vector<InequalityRecord>& inequalities() const { return inequalities_; }
  const std::vector<ConstantRecord>& constants() const { return constants_; }
  const std::vector<MonotoneRecord>& monotone() const { return monotone_; }
  const std::vector<GapClaim>& gaps() const { return gaps_; }
  const std::vector<RootRecord>& roots() const { return roots_; }
  const std::vector<ValueRecord>& values() const { return values_; }
  const ConstantTable& symbols() const { return symbols_; }

  /// Record lookup across inequality and monotone records. Throws NotFoundError.
  const InequalityRecord& get(std::string_view id) const;
  const MonotoneRecord& get_monotone(std::string_view id) const;
  const ConstantRecord& get_constant(std::string_view id) const;
  bool contains(std::string_view id) const;

  /// Inequality ids, optionally restricted to one section.
  std::vector<std::string> list(std::optional<Section> filter = std::nullopt) const;

  /// Enclosure of a constant by record id (e.g. const_alpha) or DSL symbol.
  Interval resolve_constant(std::string_view id) const;

  /// Appends statements from DSL text: one per line, `#` comments, optional
  /// `id:` prefix. Throws FormatError naming the origin and line.
  void add_statements(std::string_view text, std::string_view origin);
  /// Reads a statement file. Throws IoError when it cannot be read.
  void load_file(const std::string& path);

  friend Catalog load_builtin();

 private:
  std::vector<InequalityRecord> inequalities_;
  std::vector<ConstantRecord> constants_;
  std::vector<MonotoneRecord> monotone_;
  std::vector<GapClaim> gaps_;
  std::vector<RootRecord> roots_;
  std::vector<ValueRecord> values_;
  ConstantTable symbols_;
};

/// The built-in catalog, built once and shared.
Catalog load_builtin();
const Catalog& builtin_catalog();

/// Symbols available to DSL text: pi, e and every catalog constant.
const ConstantTable& catalog_constants();

}  // namespace ineqcert
