#include "ineqcert/certify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <queue>

#include <nlohmann/json.hpp>

#include "ineqcert/errors.hpp"

namespace ineqcert {

SignConfig default_sign_config() {
  SignConfig cfg;
  if (const char* env = std::getenv("INEQCERT_MAX_DEPTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 200) cfg.max_depth = static_cast<int>(v);
  }
  return cfg;
}

std::string_view to_string(CertMode m) {
  switch (m) {
    case CertMode::kNonnegGlobal: return "nonneg_global";
    case CertMode::kStrictOutsideSharp: return "strict_outside_sharp";
    case CertMode::kMonotone: return "monotone";
    case CertMode::kRefuted: return "refuted";
  }
  return "?";
}

std::string_view to_string(CertStatus s) {
  switch (s) {
    case CertStatus::kProven: return "proven";
    case CertStatus::kProvenOnTruncation: return "proven-on-truncation";
    case CertStatus::kRefuted: return "refuted";
    case CertStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(CellRegion r) {
  switch (r) {
    case CellRegion::kStrict: return "strict";
    case CellRegion::kExclusion: return "exclusion";
    case CellRegion::kResidual: return "residual";
  }
  return "?";
}

namespace {

std::optional<Expr> try_differentiate(const Expr& e) {
  try {
    return differentiate(e);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Interval> intersect_or_keep(const Interval& a, const std::optional<Interval>& b) {
  if (!b || !b->is_finite()) return a;
  if (auto r = a.intersect(*b)) return r;
  return a;
}

}  // namespace

Interval cell_enclosure(const Expr& e, const std::optional<Expr>& d1, const std::optional<Expr>& d2,
                        const Interval& x) {
  // A failure here means e may be undefined somewhere on x; the Taylor forms
  // below are only valid where e is, so the error propagates.
  Interval result = eval_interval(e, x);
  if (x.is_point() || !d1) return result;
  const Interval m(x.mid());
  const Interval dev = x - m;
  Interval fm;
  try {
    fm = eval_interval(e, m);
  } catch (const Error&) {
    return result;
  }
  try {
    result = *intersect_or_keep(result, fm + eval_interval(*d1, x) * dev);
  } catch (const Error&) {
  }
  if (d2) {
    try {
      const Interval t2 = fm + eval_interval(*d1, m) * dev + eval_interval(*d2, x) * sqr(dev) * Interval(0.5);
      result = *intersect_or_keep(result, t2);
    } catch (const Error&) {
    }
  }
  return result;
}

namespace {

struct Item {
  double lo;
  double hi;
  int depth;
};

struct WiderFirst {
  bool operator()(const Item& a, const Item& b) const {
    const double wa = a.hi - a.lo;
    const double wb = b.hi - b.lo;
    if (wa != wb) return wa < wb;
    return a.lo > b.lo;
  }
};

enum class Outcome { kOk, kRefuted, kInconclusive };

class Engine {
 public:
  Engine(const Expr& e, const SignConfig& cfg) : e_(e), cfg_(cfg) {
    if (cfg.taylor_forms) {
      d1_ = try_differentiate(e);
      if (d1_) d2_ = try_differentiate(*d1_);
    }
  }

  const std::optional<Counterexample>& counterexample() const { return cex_; }
  const std::optional<Cell>& worst() const { return worst_; }

  Interval enclose(const Interval& x) const { return cell_enclosure(e_, d1_, d2_, x); }

  Outcome run(double a, double b, bool strict, CellRegion region, std::size_t budget, std::vector<Cell>& out) {
    std::priority_queue<Item, std::vector<Item>, WiderFirst> queue;
    queue.push({a, b, 0});
    std::vector<Cell> accepted;
    std::size_t processed = 0;
    while (!queue.empty()) {
      const Item it = queue.top();
      queue.pop();
      ++processed;
      const Interval x(it.lo, it.hi);
      std::optional<Interval> enc;
      try {
        enc = enclose(x);
      } catch (const PoleError&) {
      } catch (const DomainError&) {
      }
      if (enc && (strict ? enc->lo() > 0 : enc->lo() >= 0)) {
        accepted.push_back({it.lo, it.hi, enc, region, it.depth});
        continue;
      }
      if (find_counterexample(it, !enc.has_value())) {
        out.insert(out.end(), accepted.begin(), accepted.end());
        return Outcome::kRefuted;
      }
      const double mid = it.lo + (it.hi - it.lo) / 2;
      const bool splittable = mid > it.lo && mid < it.hi;
      if (it.depth >= cfg_.max_depth || processed >= budget || !splittable) {
        worst_ = Cell{it.lo, it.hi, enc, region, it.depth};
        if (region == CellRegion::kStrict) out.insert(out.end(), accepted.begin(), accepted.end());
        return Outcome::kInconclusive;
      }
      queue.push({it.lo, mid, it.depth + 1});
      queue.push({mid, it.hi, it.depth + 1});
    }
    out.insert(out.end(), accepted.begin(), accepted.end());
    return Outcome::kOk;
  }

 private:
  // Searches the cell endpoints and midpoint for a confirmed negative value.
  bool find_counterexample(const Item& it, bool enclosure_failed) {
    const double mid = it.lo + (it.hi - it.lo) / 2;
    std::optional<double> best_x;
    HighReal best = 0;
    bool mid_failed = false;
    for (double p : {it.lo, mid, it.hi}) {
      try {
        const HighReal v = eval_point(e_, HighReal(p));
        if (v < best) {
          best = v;
          best_x = p;
        }
      } catch (const Error&) {
        if (p == mid) mid_failed = true;
      }
    }
    if (enclosure_failed && mid_failed) {
      try {
        eval_interval(e_, Interval(mid));
      } catch (const PoleError& err) {
        throw PoleError(std::string(err.what()) + " on cell " + to_string(Interval(it.lo, it.hi)));
      } catch (const DomainError& err) {
        throw DomainError(std::string(err.what()) + " on cell " + to_string(Interval(it.lo, it.hi)));
      }
    }
    if (!best_x) return false;
    try {
      const Interval v = eval_interval(e_, Interval(*best_x));
      if (v.hi() < 0) {
        cex_ = Counterexample{*best_x, v, std::nullopt, std::nullopt};
        return true;
      }
    } catch (const Error&) {
    }
    return false;
  }

  const Expr& e_;
  const SignConfig& cfg_;
  std::optional<Expr> d1_;
  std::optional<Expr> d2_;
  std::optional<Counterexample> cex_;
  std::optional<Cell> worst_;
};

struct Zone {
  double lo;
  double hi;
  Interval point;
};

double down(double x) { return std::nextafter(x, -HUGE_VAL); }
double up(double x) { return std::nextafter(x, HUGE_VAL); }

// Shell boundaries from `outer` towards `inner`, halving the distance each time.
std::vector<double> shell_edges(double outer, double inner, int max_shells) {
  std::vector<double> edges{outer};
  const double d = inner - outer;  // signed
  for (int k = 1; k <= max_shells; ++k) {
    const double s = inner - std::ldexp(d, -k);
    const double prev = edges.back();
    if ((d > 0 && !(s > prev && s < inner)) || (d < 0 && !(s < prev && s > inner))) break;
    edges.push_back(s);
  }
  return edges;
}

}  // namespace

Certificate verify_sign(const Expr& e, const Interval& domain, const std::vector<Interval>& sharp,
                        const SignConfig& cfg, bool strict) {
  if (!domain.is_finite()) throw DomainError("verify_sign needs a bounded domain, got " + to_string(domain));
  if (!(domain.lo() < domain.hi())) throw DomainError("verify_sign needs a domain of positive width");
  if (!(cfg.delta > 0)) throw DomainError("sharpness exclusion radius must be positive");

  Certificate cert;
  cert.config = cfg;
  cert.expression = to_string(e);
  cert.domain = domain;
  const bool strict_outside = strict || !sharp.empty();
  cert.mode = strict_outside ? CertMode::kStrictOutsideSharp : CertMode::kNonnegGlobal;

  std::vector<Zone> zones;
  for (const auto& p : sharp) {
    if (p.hi() < domain.lo() || p.lo() > domain.hi()) {
      throw DomainError("sharpness point " + to_string(p) + " outside " + to_string(domain));
    }
    const Interval clamped(std::max(p.lo(), domain.lo()), std::min(p.hi(), domain.hi()));
    const double zlo = std::max(domain.lo(), down(clamped.lo() - cfg.delta));
    const double zhi = std::min(domain.hi(), up(clamped.hi() + cfg.delta));
    zones.push_back({zlo, zhi, clamped});
    cert.exclusions.push_back({p, cfg.delta});
  }
  std::sort(zones.begin(), zones.end(), [](const Zone& a, const Zone& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < zones.size(); ++i) {
    if (zones[i].lo <= zones[i - 1].hi) throw DomainError("sharpness exclusions overlap; reduce delta");
  }

  Engine engine(e, cfg);
  auto finish_refuted = [&]() {
    cert.status = CertStatus::kRefuted;
    cert.mode = CertMode::kRefuted;
    cert.counterexample = engine.counterexample();
  };

  std::vector<Cell> cells;
  std::size_t remaining = cfg.max_cells;
  double cursor = domain.lo();
  for (std::size_t zi = 0; zi <= zones.size(); ++zi) {
    const double region_end = zi < zones.size() ? zones[zi].lo : domain.hi();
    if (region_end > cursor) {
      std::vector<Cell> part;
      const Outcome o = engine.run(cursor, region_end, strict_outside, CellRegion::kStrict, remaining, part);
      remaining = part.size() < remaining ? remaining - part.size() : 0;
      cells.insert(cells.end(), part.begin(), part.end());
      if (o == Outcome::kRefuted) {
        finish_refuted();
        break;
      }
      if (o == Outcome::kInconclusive) {
        cert.status = CertStatus::kInconclusive;
        cert.worst_cell = engine.worst();
        cert.notes.push_back("cell budget or depth exhausted outside exclusions");
        break;
      }
    }
    if (zi == zones.size()) {
      cert.status = CertStatus::kProven;
      break;
    }

    const Zone& z = zones[zi];
    bool refuted = false;
    // Left side: shells from z.lo up to the point.
    double residual_lo = z.point.lo();
    if (z.lo < z.point.lo()) {
      const auto edges = shell_edges(z.lo, z.point.lo(), cfg.max_shells);
      residual_lo = edges.back();
      for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        std::vector<Cell> part;
        const Outcome o = engine.run(edges[k], edges[k + 1], false, CellRegion::kExclusion, cfg.shell_cells, part);
        if (o == Outcome::kRefuted) {
          refuted = true;
          break;
        }
        if (o == Outcome::kInconclusive) {
          residual_lo = edges[k];
          break;
        }
        cells.insert(cells.end(), part.begin(), part.end());
      }
    }
    double residual_hi = z.point.hi();
    std::vector<Cell> right_cells;
    if (!refuted && z.hi > z.point.hi()) {
      const auto edges = shell_edges(z.hi, z.point.hi(), cfg.max_shells);
      residual_hi = edges.back();
      for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        std::vector<Cell> part;
        const Outcome o = engine.run(edges[k + 1], edges[k], false, CellRegion::kExclusion, cfg.shell_cells, part);
        if (o == Outcome::kRefuted) {
          refuted = true;
          break;
        }
        if (o == Outcome::kInconclusive) {
          residual_hi = edges[k];
          break;
        }
        right_cells.insert(right_cells.end(), part.begin(), part.end());
      }
    }
    if (refuted) {
      finish_refuted();
      break;
    }
    if (residual_lo < residual_hi) cells.push_back({residual_lo, residual_hi, std::nullopt, CellRegion::kResidual, 0});
    cells.insert(cells.end(), right_cells.begin(), right_cells.end());
    cursor = z.hi;
  }

  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });
  for (const auto& c : cells) cert.depth = std::max(cert.depth, c.depth);
  cert.cells = std::move(cells);
  return cert;
}

RevalidationResult revalidate(const Certificate& cert, const Expr& e) {
  RevalidationResult r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.problems.push_back(std::move(msg));
  };
  if (cert.status == CertStatus::kRefuted) {
    if (!cert.counterexample) {
      fail("refuted certificate without a counterexample");
      return r;
    }
    try {
      const Interval v = eval_interval(e, Interval(cert.counterexample->x));
      if (!(v.hi() < 0)) fail("counterexample value is not certainly negative: " + to_string(v));
    } catch (const Error& err) {
      fail(std::string("counterexample not evaluable: ") + err.what());
    }
    return r;
  }
  if (cert.cells.empty()) {
    fail("no cells");
    return r;
  }
  auto cells = cert.cells;
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });
  if (cells.front().lo != cert.domain.lo()) fail("first cell does not start at the domain lower end");
  if (cells.back().hi != cert.domain.hi()) fail("last cell does not end at the domain upper end");
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    if (cells[i].hi != cells[i + 1].lo) {
      fail("gap or overlap between cells at " + shortest_decimal(cells[i].hi));
    }
  }
  for (const auto& c : cells) {
    if (!(c.lo < c.hi)) fail("empty cell at " + shortest_decimal(c.lo));
  }

  std::optional<Expr> d1;
  std::optional<Expr> d2;
  if (cert.config.taylor_forms) {
    d1 = try_differentiate(e);
    if (d1) d2 = try_differentiate(*d1);
  }
  const bool strict = cert.mode != CertMode::kNonnegGlobal;
  for (const auto& c : cells) {
    if (c.region == CellRegion::kResidual) {
      const bool covered = std::any_of(cert.exclusions.begin(), cert.exclusions.end(), [&](const Exclusion& x) {
        return c.lo >= down(x.point.lo() - x.delta) && c.hi <= up(x.point.hi() + x.delta);
      });
      if (!covered) fail("residual cell outside every exclusion at " + shortest_decimal(c.lo));
      continue;
    }
    try {
      const Interval enc = cell_enclosure(e, d1, d2, Interval(c.lo, c.hi));
      const bool need_strict = strict && c.region == CellRegion::kStrict;
      if (need_strict ? !(enc.lo() > 0) : !(enc.lo() >= 0)) {
        fail("sign not reproduced on [" + shortest_decimal(c.lo) + ", " + shortest_decimal(c.hi) + "]");
      }
    } catch (const Error& err) {
      fail(std::string("cell not evaluable: ") + err.what());
    }
  }
  return r;
}

Interval limit_at(const Expr& e, const Interval& point) {
  try {
    const Interval v = eval_interval(e, point);
    if (v.is_finite()) return v;
  } catch (const PoleError&) {
    if (!(point.lo() == 0 && point.hi() == 0)) throw;
  } catch (const DomainError&) {
    if (!(point.lo() == 0 && point.hi() == 0)) throw;
  }
  const auto c = taylor_at_zero(e, 0);
  return Interval(c[0].lower_double(), c[0].upper_double());
}

namespace {

// +1 or -1 when the sign of e at x is certain, 0 otherwise.
int certain_sign(const Expr& e, double x) {
  const Interval v = eval_interval(e, Interval(x));
  if (v.lo() > 0) return 1;
  if (v.hi() < 0) return -1;
  return 0;
}

}  // namespace

RootResult find_root(const Expr& e, const Interval& bracket, double tol) {
  double lo = bracket.lo();
  double hi = bracket.hi();
  const int s_lo = certain_sign(e, lo);
  const int s_hi = certain_sign(e, hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
    throw BracketError("no certified sign change of " + to_string(e) + " on " + to_string(bracket));
  }
  while (hi - lo > tol) {
    const double m = lo + (hi - lo) / 2;
    if (!(m > lo && m < hi)) break;
    const Interval v = eval_interval(e, Interval(m));
    if (v.lo() == 0 && v.hi() == 0) {
      lo = hi = m;
      break;
    }
    const int s = v.lo() > 0 ? 1 : (v.hi() < 0 ? -1 : 0);
    if (s == 0) {
      // Try to pin the root between m - tol/2 and m + tol/2.
      const double a = std::max(lo, m - tol / 2);
      const double b = std::min(hi, m + tol / 2);
      if (a > lo && b < hi && certain_sign(e, a) == s_lo && certain_sign(e, b) == s_hi) {
        lo = a;
        hi = b;
      }
      break;
    }
    if (s == s_lo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  RootResult r;
  r.enclosure = Interval(lo, hi);
  HighReal a = lo;
  HighReal b = hi;
  const bool lo_negative = s_lo < 0;
  for (int i = 0; i < 200 && b - a > 0; ++i) {
    const HighReal m = (a + b) / 2;
    if (m == a || m == b) break;
    const HighReal v = eval_point(e, m);
    if (v == 0) {
      a = b = m;
      break;
    }
    if ((v < 0) == lo_negative) {
      a = m;
    } else {
      b = m;
    }
  }
  r.estimate = (a + b) / 2;
  return r;
}

GapResult gap_scan(const Expr& f, const Expr& bound, const Interval& domain, int grid_n) {
  if (grid_n < 1) throw DomainError("gap_scan: grid_n must be positive");
  if (!domain.is_finite() || !(domain.lo() < domain.hi())) throw DomainError("gap_scan: bad domain");
  const Expr g = Expr::sub(f, bound);
  const double a = domain.lo();
  const double b = domain.hi();

  GapResult result;
  HighReal best = -1;
  for (int i = 0; i <= grid_n; ++i) {
    const HighReal x = HighReal(a) + (HighReal(b) - HighReal(a)) * i / grid_n;
    try {
      const HighReal v = boost::multiprecision::abs(eval_point(g, x));
      if (v > best) {
        best = v;
        result.argmax = to_double(x);
      }
    } catch (const Error&) {
    }
  }
  result.max_gap = best < 0 ? 0.0 : to_double(best);

  double lower = 0;
  try {
    lower = abs(eval_interval(g, Interval(result.argmax))).lo();
  } catch (const Error&) {
  }

  const std::optional<Expr> d1 = try_differentiate(g);
  const std::optional<Expr> d2 = d1 ? try_differentiate(*d1) : std::nullopt;
  struct GapCell {
    double lo;
    double hi;
    double ub;
    int depth;
    bool operator<(const GapCell& o) const { return ub < o.ub || (ub == o.ub && lo > o.lo); }
  };
  auto bound_of = [&](double lo, double hi) { return abs(cell_enclosure(g, d1, d2, Interval(lo, hi))).hi(); };

  std::priority_queue<GapCell> heap;
  double prev = a;
  for (int i = 1; i <= grid_n; ++i) {
    const double x = i == grid_n ? b : std::max(prev, a + (b - a) * (static_cast<double>(i) / grid_n));
    if (x > prev) {
      heap.push({prev, x, bound_of(prev, x), 0});
      prev = x;
    }
  }
  constexpr double kRelTol = 1e-7;
  constexpr double kAbsTol = 1e-12;
  constexpr std::size_t kBudget = 200000;
  std::size_t splits = 0;
  double upper = heap.top().ub;
  while (!heap.empty()) {
    const GapCell c = heap.top();
    upper = c.ub;
    if (c.ub <= lower * (1 + kRelTol) + kAbsTol || splits >= kBudget || c.depth >= 40) break;
    heap.pop();
    const double mid = c.lo + (c.hi - c.lo) / 2;
    if (!(mid > c.lo && mid < c.hi)) break;
    heap.push({c.lo, mid, bound_of(c.lo, mid), c.depth + 1});
    heap.push({mid, c.hi, bound_of(mid, c.hi), c.depth + 1});
    ++splits;
  }
  result.refined = Interval(std::min(lower, upper), upper);
  return result;
}

ValueCheck verify_value(const Expr& e, const Interval& point, const Interval& expected, double tol) {
  ValueCheck r;
  r.enclosure = eval_interval(e, point);
  const Interval window((Interval(expected.lo()) - Interval(tol)).lo(), (Interval(expected.hi()) + Interval(tol)).hi());
  r.pass = window.contains(r.enclosure);
  return r;
}

std::string shortest_decimal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string hex_float(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::hex);
  std::string s(buf, res.ptr);
  if (!s.empty() && s[0] == '-') return "-0x" + s.substr(1);
  return "0x" + s;
}

namespace {

using nlohmann::ordered_json;

ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return hex_float(x);
}

ordered_json interval_json(const Interval& a) {
  return ordered_json{{"lo", number(a.lo())}, {"hi", number(a.hi())}, {"lo_hex", hex_float(a.lo())},
                      {"hi_hex", hex_float(a.hi())}};
}

double parse_hex(const ordered_json& j) {
  const std::string s = j.get<std::string>();
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  const bool negative = !s.empty() && s[0] == '-';
  const std::size_t skip = negative ? 3 : 2;
  if (s.size() <= skip) throw FormatError("bad hex float '" + s + "'");
  double v = 0;
  const auto res = std::from_chars(s.data() + skip, s.data() + s.size(), v, std::chars_format::hex);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw FormatError("bad hex float '" + s + "'");
  return negative ? -v : v;
}

Interval interval_from(const ordered_json& j) { return Interval(parse_hex(j.at("lo_hex")), parse_hex(j.at("hi_hex"))); }

ordered_json cell_json(const Cell& c) {
  ordered_json j{{"lo", number(c.lo)}, {"hi", number(c.hi)}, {"lo_hex", hex_float(c.lo)}, {"hi_hex", hex_float(c.hi)},
                 {"region", to_string(c.region)}, {"depth", c.depth}};
  if (c.enclosure) {
    j["enc_lo"] = number(c.enclosure->lo());
    j["enc_hi"] = number(c.enclosure->hi());
    j["enc_lo_hex"] = hex_float(c.enclosure->lo());
    j["enc_hi_hex"] = hex_float(c.enclosure->hi());
  }
  return j;
}

Cell cell_from(const ordered_json& j) {
  Cell c;
  c.lo = parse_hex(j.at("lo_hex"));
  c.hi = parse_hex(j.at("hi_hex"));
  c.depth = j.at("depth").get<int>();
  const std::string region = j.at("region").get<std::string>();
  if (region == "strict") {
    c.region = CellRegion::kStrict;
  } else if (region == "exclusion") {
    c.region = CellRegion::kExclusion;
  } else if (region == "residual") {
    c.region = CellRegion::kResidual;
  } else {
    throw FormatError("unknown cell region '" + region + "'");
  }
  if (j.contains("enc_lo_hex")) c.enclosure = Interval(parse_hex(j.at("enc_lo_hex")), parse_hex(j.at("enc_hi_hex")));
  return c;
}

template <class Enum>
Enum enum_from(const std::string& s, std::initializer_list<Enum> values) {
  for (Enum v : values) {
    if (to_string(v) == s) return v;
  }
  throw FormatError("unknown value '" + s + "'");
}

}  // namespace

std::string certificate_json(const Certificate& cert) {
  ordered_json j;
  j["schema"] = kCertificateSchema;
  j["id"] = cert.id;
  j["mode"] = to_string(cert.mode);
  j["status"] = to_string(cert.status);
  j["expression"] = cert.expression;
  j["domain"] = interval_json(cert.domain);
  j["evenness_reduced"] = cert.evenness_reduced;
  j["config"] = ordered_json{{"max_depth", cert.config.max_depth},     {"delta", cert.config.delta},
                             {"delta_hex", hex_float(cert.config.delta)}, {"max_cells", cert.config.max_cells},
                             {"shell_cells", cert.config.shell_cells}, {"max_shells", cert.config.max_shells},
                             {"taylor_forms", cert.config.taylor_forms}};
  j["depth"] = cert.depth;
  ordered_json ex = ordered_json::array();
  for (const auto& e : cert.exclusions) {
    ordered_json item = interval_json(e.point);
    item["delta"] = e.delta;
    item["delta_hex"] = hex_float(e.delta);
    ex.push_back(item);
  }
  j["exclusions"] = ex;
  ordered_json cells = ordered_json::array();
  for (const auto& c : cert.cells) cells.push_back(cell_json(c));
  j["cell_count"] = cert.cells.size();
  j["cells"] = cells;
  if (cert.counterexample) {
    const auto& c = *cert.counterexample;
    ordered_json cj{{"x", c.x}, {"x_hex", hex_float(c.x)}, {"value", interval_json(c.value)}};
    if (c.lhs) cj["lhs"] = interval_json(*c.lhs);
    if (c.rhs) cj["rhs"] = interval_json(*c.rhs);
    j["counterexample"] = cj;
  }
  if (cert.worst_cell) j["worst_cell"] = cell_json(*cert.worst_cell);
  j["notes"] = cert.notes;
  return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(std::string("certificate is not valid JSON: ") + err.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kCertificateSchema) throw FormatError("unsupported certificate schema");
    Certificate c;
    c.id = j.at("id").get<std::string>();
    c.mode = enum_from(j.at("mode").get<std::string>(), {CertMode::kNonnegGlobal, CertMode::kStrictOutsideSharp,
                                                         CertMode::kMonotone, CertMode::kRefuted});
    c.status = enum_from(j.at("status").get<std::string>(), {CertStatus::kProven, CertStatus::kProvenOnTruncation,
                                                             CertStatus::kRefuted, CertStatus::kInconclusive});
    c.expression = j.at("expression").get<std::string>();
    c.domain = interval_from(j.at("domain"));
    c.evenness_reduced = j.at("evenness_reduced").get<bool>();
    const auto& cfg = j.at("config");
    c.config.max_depth = cfg.at("max_depth").get<int>();
    c.config.delta = parse_hex(cfg.at("delta_hex"));
    c.config.max_cells = cfg.at("max_cells").get<std::size_t>();
    c.config.shell_cells = cfg.at("shell_cells").get<std::size_t>();
    c.config.max_shells = cfg.at("max_shells").get<int>();
    c.config.taylor_forms = cfg.at("taylor_forms").get<bool>();
    c.depth = j.at("depth").get<int>();
    for (const auto& e : j.at("exclusions")) c.exclusions.push_back({interval_from(e), parse_hex(e.at("delta_hex"))});
    for (const auto& cell : j.at("cells")) c.cells.push_back(cell_from(cell));
    if (j.contains("counterexample")) {
      const auto& cj = j.at("counterexample");
      Counterexample ce;
      ce.x = parse_hex(cj.at("x_hex"));
      ce.value = interval_from(cj.at("value"));
      if (cj.contains("lhs")) ce.lhs = interval_from(cj.at("lhs"));
      if (cj.contains("rhs")) ce.rhs = interval_from(cj.at("rhs"));
      c.counterexample = ce;
    }
    if (j.contains("worst_cell")) c.worst_cell = cell_from(j.at("worst_cell"));
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(std::string("malformed certificate: ") + err.what());
  }
}

}  // namespace ineqcert
