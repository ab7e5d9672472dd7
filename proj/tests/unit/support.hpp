#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "ineqcert/catalog.hpp"
#include "ineqcert/certify.hpp"
#include "ineqcert/verify.hpp"

namespace support {

/// Domain a record is certified on: truncation, or the stated domain with
/// infinite ends cut at the default truncation, halved when symmetric.
inline ineqcert::Interval certified_domain(const ineqcert::InequalityRecord& r) {
  const auto& s = r.stmt;
  double lo = s.lo.infinite ? -ineqcert::kDefaultTruncation : s.lo.enclosure.hi();
  double hi = s.hi.infinite ? ineqcert::kDefaultTruncation : s.hi.enclosure.lo();
  if (r.truncation) {
    lo = r.truncation->lo.hi();
    hi = r.truncation->hi.lo();
  }
  if (lo < 0 && hi > 0 && std::fabs(lo + hi) < 1e-12) lo = 0;
  return ineqcert::Interval(lo, hi);
}

/// Cells sorted by lo cover [domain.lo, domain.hi] with shared endpoints only.
inline bool tiles_exactly(const ineqcert::Certificate& c) {
  if (c.cells.empty()) return false;
  auto cells = c.cells;
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  if (cells.front().lo != c.domain.lo() || cells.back().hi != c.domain.hi()) return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!(cells[i].lo < cells[i].hi)) return false;
    if (i + 1 < cells.size() && cells[i].hi != cells[i + 1].lo) return false;
  }
  return true;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace support
