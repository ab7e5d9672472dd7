#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ineqcert/catalog.hpp"
#include "ineqcert/certify.hpp"
#include "ineqcert/errors.hpp"
#include "ineqcert/series.hpp"
#include "ineqcert/verify.hpp"
#include "ineqcert/version.hpp"

namespace fs = std::filesystem;
using namespace ineqcert;

namespace {

// Exit codes (sysexits.h where one fits).
constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDataErr = 65;
constexpr int kExitIoErr = 74;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::vector<std::string> catalog_files;
  std::optional<std::string> filter;
  std::string id;
  std::optional<int> depth;
  std::optional<double> delta;
  std::string json_path;
  int jobs = 1;
  std::string out_dir;
  bool timings = false;
  std::string series_name;
  int terms = kDefaultSeriesTerms;
  std::string format = "csv";
  std::string file;
};

Catalog open_catalog(const Options& opt) {
  Catalog c = load_builtin();
  for (const auto& path : opt.catalog_files) c.load_file(path);
  return c;
}

SignConfig config_from(const Options& opt) {
  SignConfig cfg = default_sign_config();
  if (opt.depth) cfg.max_depth = *opt.depth;
  if (opt.delta) cfg.delta = *opt.delta;
  return cfg;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text << '\n';
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

int exit_code(CertStatus s) {
  switch (s) {
    case CertStatus::kProven:
    case CertStatus::kProvenOnTruncation: return kExitOk;
    case CertStatus::kRefuted: return kExitRefuted;
    case CertStatus::kInconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::string num(double x) { return shortest_decimal(x); }

void print_certificate_summary(const Certificate& c) {
  std::cout << c.id << ": " << to_string(c.status) << " (" << to_string(c.mode) << ")\n";
  std::cout << "  expression: " << c.expression << "\n";
  std::cout << "  domain:     " << to_string(c.domain) << (c.evenness_reduced ? " (even reduction)" : "") << "\n";
  std::cout << "  cells:      " << c.cells.size() << ", depth " << c.depth << "\n";
  for (const auto& ex : c.exclusions) {
    std::cout << "  exclusion:  " << to_string(ex.point) << " +/- " << num(ex.delta) << "\n";
  }
  if (c.counterexample) {
    const auto& ce = *c.counterexample;
    std::cout << "  counterexample: x = " << num(ce.x) << " (" << hex_float(ce.x) << "), value " << to_string(ce.value)
              << "\n";
    if (ce.lhs && ce.rhs) std::cout << "    lhs " << to_string(*ce.lhs) << ", rhs " << to_string(*ce.rhs) << "\n";
  }
  if (c.worst_cell) {
    std::cout << "  worst cell: [" << num(c.worst_cell->lo) << ", " << num(c.worst_cell->hi) << "]";
    if (c.worst_cell->enclosure) std::cout << " enclosure " << to_string(*c.worst_cell->enclosure);
    std::cout << "\n";
  }
  for (const auto& n : c.notes) std::cout << "  note: " << n << "\n";
}

int cmd_list(const Options& opt) {
  const Catalog cat = open_catalog(opt);
  std::optional<Section> filter;
  if (opt.filter) {
    filter = section_from_name(*opt.filter);
    if (!filter) throw UsageError("unknown section '" + *opt.filter + "' (expected sec1, sec2 or sec3)");
  }
  for (const auto& id : cat.list(filter)) {
    const auto& r = cat.get(id);
    std::cout << id << "\t" << to_string(r.section) << "\t" << r.citation.location << "\n";
  }
  if (!filter) {
    for (const auto& m : cat.monotone()) std::cout << m.id << "\tmonotone\t" << m.citation.location << "\n";
  }
  return kExitOk;
}

int cmd_show(const Options& opt) {
  const Catalog cat = open_catalog(opt);
  for (const auto& r : cat.inequalities()) {
    if (r.id != opt.id) continue;
    std::cout << "id:         " << r.id << "\n";
    std::cout << "statement:  " << r.dsl << "\n";
    std::cout << "canonical:  " << to_string(r.stmt) << "\n";
    std::cout << "domain:     [" << (r.stmt.lo.infinite ? "-inf" : to_string(r.stmt.lo.enclosure)) << ", "
              << (r.stmt.hi.infinite ? "inf" : to_string(r.stmt.hi.enclosure)) << "]\n";
    std::cout << "sharp at:   ";
    if (r.stmt.sharp_points.empty()) std::cout << "none";
    for (std::size_t i = 0; i < r.stmt.sharp_points.size(); ++i) {
      std::cout << (i ? ", " : "") << to_string(r.stmt.sharp_points[i].expr);
    }
    std::cout << "\n";
    if (r.truncation) std::cout << "truncation: [" << r.truncation->lo_text << ", " << r.truncation->hi_text << "]\n";
    if (r.delta) std::cout << "delta:      " << num(*r.delta) << "\n";
    std::cout << "section:    " << to_string(r.section) << "\n";
    std::cout << "expected:   " << to_string(r.expected) << "\n";
    std::cout << "citation:   " << r.citation.location << "\n";
    std::cout << "quote:      " << r.citation.quote << "\n";
    if (!r.notes.empty()) std::cout << "notes:      " << r.notes << "\n";
    return kExitOk;
  }
  for (const auto& m : cat.monotone()) {
    if (m.id != opt.id) continue;
    std::cout << "id:         " << m.id << "\n";
    std::cout << "function:   " << m.function_text << "\n";
    std::cout << "domain:     [" << m.lo_text << ", " << m.hi_text << "]\n";
    std::cout << "direction:  " << to_string(m.direction) << "\n";
    std::cout << "limits:     " << m.left_limit_text << ", " << m.right_limit_text << "\n";
    std::cout << "delta_end:  " << num(m.delta_end) << "\n";
    std::cout << "citation:   " << m.citation.location << "\n";
    std::cout << "quote:      " << m.citation.quote << "\n";
    if (!m.notes.empty()) std::cout << "notes:      " << m.notes << "\n";
    return kExitOk;
  }
  throw UsageError("unknown record id '" + opt.id + "'");
}

int cmd_verify(const Options& opt) {
  const Catalog cat = open_catalog(opt);
  const SignConfig cfg = config_from(opt);
  Certificate cert;
  int code = kExitOk;
  bool found = false;
  for (const auto& r : cat.inequalities()) {
    if (r.id != opt.id) continue;
    found = true;
    cert = verify_inequality(r, cfg, !opt.delta.has_value());
    code = exit_code(cert.status);
    print_certificate_summary(cert);
  }
  for (const auto& m : cat.monotone()) {
    if (m.id != opt.id) continue;
    found = true;
    const MonotoneResult res = verify_monotone(m, cfg);
    cert = res.certificate;
    print_certificate_summary(cert);
    std::cout << "  left limit:  " << to_string(res.left_limit) << (res.left_ok ? " matches " : " does not match ")
              << m.left_limit_text << "\n";
    std::cout << "  right limit: " << to_string(res.right_limit) << (res.right_ok ? " matches " : " does not match ")
              << m.right_limit_text << "\n";
    code = exit_code(cert.status);
    if (code == kExitOk && !res.ok()) code = kExitInconclusive;
  }
  if (!found) throw UsageError("unknown record id '" + opt.id + "'");
  if (!opt.json_path.empty()) write_file(opt.json_path, certificate_json(cert));
  return code;
}

int cmd_verify_all(const Options& opt) {
  const Catalog cat = open_catalog(opt);
  const SignConfig cfg = config_from(opt);
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport report = run_all(cat, cfg, opt.jobs);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::size_t failures = 0;
  for (const auto& e : report.entries) {
    std::printf("%-28s %-10s %-21s %-4s %7zu cells %7.2fs", e.id.c_str(), e.kind.c_str(),
                std::string(to_string(e.status)).c_str(), e.ok ? "ok" : "FAIL", e.cells, e.seconds);
    if (!e.detail.empty()) std::printf("  %s", e.detail.c_str());
    std::printf("\n");
    if (!e.ok) ++failures;
  }
  std::printf("%zu records, %zu not in expected status, %.2fs\n", report.entries.size(), failures, total);

  if (!opt.out_dir.empty()) {
    const fs::path dir(opt.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    write_file(dir / "report.json", report_json(report, opt.timings));
    for (const auto& e : report.entries) {
      if (!e.certificate.id.empty()) write_file(dir / (e.id + ".json"), certificate_json(e.certificate));
    }
  }
  return report.all_ok() ? kExitOk : kExitFailed;
}

int cmd_constants(const Options& opt) {
  const Catalog cat = open_catalog(opt);
  bool all_ok = true;
  std::printf("%-20s %-34s %-44s %-10s %-10s %s\n", "id", "definition", "enclosure", "paper", "|diff|", "ok");
  for (const auto& c : cat.constants()) {
    const double diff = std::fabs(to_double(c.value) - c.decimal_reference);
    const bool ok = diff <= c.tolerance;
    all_ok = all_ok && ok;
    std::printf("%-20s %-34s %-44s %-10s %-10.3g %s\n", c.id.c_str(), c.definition.c_str(),
                to_string(c.enclosure).c_str(), num(c.decimal_reference).c_str(), diff, ok ? "yes" : "no");
  }
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_roots(const Options& opt) {
  const Catalog cat = open_catalog(opt);
  bool all_ok = true;
  std::printf("%-20s %-44s %-10s %-10s %s\n", "id", "enclosure", "paper", "tolerance", "ok");
  for (const auto& r : cat.roots()) {
    const RootResult root = find_root(r.expr, r.bracket);
    const bool ok = root.enclosure.lo() >= r.paper_value - r.tolerance && root.enclosure.hi() <= r.paper_value + r.tolerance;
    all_ok = all_ok && ok;
    std::printf("%-20s %-44s %-10s %-10s %s\n", r.id.c_str(), to_string(root.enclosure).c_str(),
                num(r.paper_value).c_str(), num(r.tolerance).c_str(), ok ? "yes" : "no");
  }
  for (const auto& v : cat.values()) {
    const ValueCheck check = verify_value(v.expr, v.point, v.expected, v.tolerance);
    all_ok = all_ok && check.pass;
    std::printf("%-20s %-44s %-10s %-10s %s\n", v.id.c_str(), to_string(check.enclosure).c_str(),
                v.expected_text.c_str(), num(v.tolerance).c_str(), check.pass ? "yes" : "no");
  }
  return all_ok ? kExitOk : kExitFailed;
}

std::string_view kind_name(GapKind k) {
  switch (k) {
    case GapKind::kBelow: return "below";
    case GapKind::kBetween: return "between";
    case GapKind::kBelowXSquared: return "below_x_squared";
  }
  return "below";
}

int cmd_gaps(const Options& opt) {
  const Catalog cat = open_catalog(opt);
  const SignConfig cfg = config_from(opt);
  bool all_ok = true;
  std::cout << "claim,kind,domain_lo,domain_hi,argmax,gap_lower,gap_upper,paper_lower,paper_upper,pass\n";
  for (const auto& g : cat.gaps()) {
    const GapOutcome out = check_gap(g, cfg);
    all_ok = all_ok && out.pass;
    std::cout << g.id << ',' << kind_name(g.kind) << ',' << g.lo_text << ',' << g.hi_text << ','
              << num(out.scan.argmax) << ',' << num(out.scan.refined.lo()) << ',' << num(out.scan.refined.hi())
              << ',' << num(g.paper_lower) << ',' << num(g.paper_upper) << ',' << (out.pass ? "pass" : "fail")
              << '\n';
  }
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_series(const Options& opt) {
  if (opt.terms < 1) throw UsageError("--terms must be at least 1");
  bool known = false;
  for (const auto& n : series_names()) known = known || n == opt.series_name;
  if (!known) throw UsageError("unknown series '" + opt.series_name + "'");
  const EvenSeries s = series(opt.series_name, opt.terms);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "ineqcert.series/v1";
    j["name"] = s.name;
    j["constant_term"] = s.constant_term.str();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int n = 1; n <= s.terms(); ++n) {
      const Rational& c = s.coeffs[n - 1];
      coeffs.push_back({{"power", 2 * n}, {"value", c.str()}, {"approx", num(c.to_double())}});
    }
    j["coefficients"] = coeffs;
    j["radius"] = std::isinf(s.radius) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(s.radius);
    j["tail_rule"] = s.tail.describe();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "power,numerator,denominator,approx\n";
    std::cout << 0 << ',' << s.constant_term.numerator_string() << ',' << s.constant_term.denominator_string() << ','
              << num(s.constant_term.to_double()) << '\n';
    for (int n = 1; n <= s.terms(); ++n) {
      const Rational& c = s.coeffs[n - 1];
      std::cout << 2 * n << ',' << c.numerator_string() << ',' << c.denominator_string() << ',' << num(c.to_double())
                << '\n';
    }
  }
  return kExitOk;
}

int cmd_check(const Options& opt) {
  Catalog cat = load_builtin();
  const std::size_t builtin_count = cat.inequalities().size();
  cat.load_file(opt.file);
  const SignConfig cfg = config_from(opt);
  int code = kExitOk;
  const auto& all = cat.inequalities();
  if (all.size() == builtin_count) std::cout << opt.file << ": no statements\n";
  for (std::size_t i = builtin_count; i < all.size(); ++i) {
    const Certificate cert = verify_inequality(all[i], cfg, !opt.delta.has_value());
    print_certificate_summary(cert);
    const int c = exit_code(cert.status);
    // refuted outranks inconclusive
    if (c == kExitRefuted || (c == kExitInconclusive && code == kExitOk)) code = c;
  }
  return code;
}

int cmd_parse(const Options& opt) {
  Catalog cat = load_builtin();
  const std::size_t builtin_count = cat.inequalities().size();
  cat.load_file(opt.file);
  const auto& all = cat.inequalities();
  for (std::size_t i = builtin_count; i < all.size(); ++i) {
    std::cout << all[i].id << ": " << to_string(all[i].stmt) << "\n";
  }
  std::cout << opt.file << ": " << all.size() - builtin_count << " statement(s) ok\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified verification of trigonometric and hyperbolic inequalities", "ineqcert"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options opt;
  app.add_option("--catalog", opt.catalog_files, "Extra statement file(s) appended to the built-in catalog")
      ->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("list", "List record ids and citations");
  list->add_option("--filter", opt.filter, "Restrict to sec1, sec2 or sec3");

  auto* show = app.add_subcommand("show", "Show one record");
  show->add_option("id", opt.id, "Record id")->required();

  auto add_engine_flags = [&](CLI::App* sub) {
    sub->add_option("--depth", opt.depth, "Maximum bisection depth")->check(CLI::Range(1, 200));
    sub->add_option("--delta", opt.delta, "Sharpness exclusion radius (overrides per-record values)")
        ->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Certify one record");
  verify->add_option("id", opt.id, "Record id")->required();
  add_engine_flags(verify);
  verify->add_option("--json", opt.json_path, "Write the certificate to this path");

  auto* verify_all = app.add_subcommand("verify-all", "Certify every record");
  verify_all->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify_all->add_option("--out", opt.out_dir, "Directory for report.json and certificates");
  verify_all->add_flag("--timings", opt.timings, "Include timings in report.json");
  add_engine_flags(verify_all);

  auto* constants = app.add_subcommand("constants", "Recompute the best-possible constants");
  auto* roots = app.add_subcommand("roots", "Recompute roots and claimed values");
  auto* gaps = app.add_subcommand("gaps", "Rigorous gap bounds as CSV");

  auto* series_cmd = app.add_subcommand("series", "Exact series coefficients");
  series_cmd->add_option("name", opt.series_name, "Series name")->required();
  series_cmd->add_option("--terms", opt.terms, "Number of coefficients");
  series_cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* check = app.add_subcommand("check", "Parse and certify statements from a file");
  check->add_option("file", opt.file, "Statement file")->required();
  add_engine_flags(check);

  auto* parse = app.add_subcommand("parse", "Parse a statement file without certifying it");
  parse->add_option("--check", opt.file, "Statement file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // A missing --catalog file is a file error, not a usage error.
    if (dynamic_cast<const CLI::ValidationError*>(&e) && std::string(e.what()).find("--catalog") != std::string::npos) {
      std::cerr << "ineqcert: " << e.what() << "\n";
      return kExitIoErr;
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list) return cmd_list(opt);
    if (*show) return cmd_show(opt);
    if (*verify) return cmd_verify(opt);
    if (*verify_all) return cmd_verify_all(opt);
    if (*constants) return cmd_constants(opt);
    if (*roots) return cmd_roots(opt);
    if (*gaps) return cmd_gaps(opt);
    if (*series_cmd) return cmd_series(opt);
    if (*check) return cmd_check(opt);
    if (*parse) return cmd_parse(opt);
  } catch (const UsageError& e) {
    std::cerr << "ineqcert: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFoundError& e) {
    std::cerr << "ineqcert: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "ineqcert: " << e.what() << "\n";
    return kExitIoErr;
  } catch (const FormatError& e) {
    std::cerr << "ineqcert: " << e.what() << "\n";
    return kExitDataErr;
  } catch (const Error& e) {
    std::cerr << "ineqcert: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitUsage;
}
