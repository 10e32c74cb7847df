#include "pinchband/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "pinchband/cobordism.hpp"
#include "pinchband/errors.hpp"
#include "pinchband/goeritz.hpp"
#include "pinchband/identify.hpp"
#include "pinchband/realizability.hpp"
#include "pinchband/search.hpp"
#include "pinchband/serialize.hpp"

namespace pinchband {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagramSource {
  std::string builtin;
  std::string pd;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--builtin", builtin, "builtin table knot, e.g. T(2,5), 6_1, m6_1");
    cmd->add_option("--pd", pd, "PD code text");
    cmd->add_option("--file", file, "file holding a PD code");
  }

  Diagram load() const {
    const int given = !builtin.empty() + !pd.empty() + !file.empty();
    if (given != 1) throw UsageError("give exactly one of --builtin, --pd, --file");
    if (!builtin.empty()) return table_diagram(builtin);
    if (!pd.empty()) return parse_pd(pd);
    return parse_pd(read_file(file));
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

std::string format_choice(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  return format;
}

std::string identification_text(const Identification& id) {
  switch (id.kind) {
    case Identification::Kind::known: return id.knot->name;
    case Identification::Kind::ambiguous: {
      std::string s = "ambiguous:";
      for (const auto& c : id.candidates) s += " " + c;
      return s;
    }
    case Identification::Kind::unknown: return "unknown (" + id.reason + ")";
  }
  return "?";
}

// -- invariants ------------------------------------------------------------------

int cmd_invariants(const DiagramSource& src, const std::string& format, std::ostream& out) {
  const Diagram d = src.load();
  const SignatureReport sig = knot_signature(d);
  const int w = writhe(d);
  const Identification id = identify(d);
  std::optional<LaurentPoly> bracket;
  if (d.crossing_count() <= kMaxBracketCrossings) {
    bracket = normalized_bracket(d);
  } else if (id.simplified.crossing_count() <= kMaxBracketCrossings) {
    bracket = normalized_bracket(id.simplified);
  }

  if (format == "json") {
    Json j = {{"pd", emit_pd(d)},
              {"crossings", d.crossing_count()},
              {"writhe", w},
              {"signature", to_json(sig)},
              {"bracket", bracket ? Json(bracket->str()) : Json(nullptr)},
              {"identification", identification_text(id)}};
    if (id.kind == Identification::Kind::known) j["slice"] = id.knot->slice;
    out << dump(j);
    return kExitOk;
  }
  out << "pd           " << emit_pd(d) << "\n";
  out << "crossings    " << d.crossing_count() << "\n";
  out << "writhe       " << w << "\n";
  out << "signature    " << sig.sigma << "\n";
  out << "determinant  " << sig.determinant << "\n";
  for (std::size_t k = 0; k < 2; ++k) {
    const ColoringBreakdown& b = sig.colorings[k];
    out << "shading " << k + 1 << "    sig(G) = " << b.form_signature << ", mu = " << b.correction << ", dim "
        << b.dimension << ", |det| " << b.determinant << "\n";
  }
  out << "bracket      " << (bracket ? bracket->str() : "n/a (too many crossings)") << "\n";
  out << "knot         " << identification_text(id) << "\n";
  return kExitOk;
}

// -- classify / grid ---------------------------------------------------------------

int cmd_classify(int n, int e, int h, bool post, const std::string& format, std::ostream& out) {
  if (n < 3 || n % 2 == 0) throw UsageError("n must be odd and at least 3");
  const PairStatus s = classify({n, e, h}, post);
  if (format == "json") {
    Json j = {{"n", n}, {"e", e}, {"h", h}, {"post", post}};
    j.update(to_json(s));
    out << dump(j);
    return kExitOk;
  }
  out << "T(2," << n << ") (e,h) = (" << e << "," << h << "): " << to_string(s.verdict);
  if (!s.clause.empty()) out << "  " << s.clause;
  if (s.m) out << "  m=" << *s.m;
  if (s.l) out << " l=" << *s.l;
  out << "\n";
  return kExitOk;
}

int cmd_grid(int n, int e_min, int e_max, int h_min, int h_max, bool post, const std::string& format,
             std::ostream& out) {
  if (n < 3 || n % 2 == 0) throw UsageError("n must be odd and at least 3");
  if (e_min > e_max || h_min > h_max || h_min < 0) throw UsageError("empty or negative range");
  const std::vector<GridCell> cells = grid(n, e_min, e_max, h_min, h_max, post);
  if (format == "json") {
    Json rows = Json::array();
    for (const GridCell& c : cells) {
      Json r = {{"n", c.n}, {"e", c.e}, {"h", c.h}};
      r.update(to_json(c.status));
      rows.push_back(r);
    }
    out << dump(rows);
  } else if (format == "text") {
    // R realizable, ? unknown, . not realizable; h grows downward.
    for (int h = h_min; h <= h_max; ++h) {
      out << "h=" << std::setw(3) << std::left << h << ' ';
      for (int e = e_min; e <= e_max; ++e) {
        const Verdict v = cells[static_cast<std::size_t>((h - h_min) * (e_max - e_min + 1) + (e - e_min))].status.verdict;
        out << (v == Verdict::realizable ? 'R' : v == Verdict::unknown ? '?' : '.');
      }
      out << "\n";
    }
  } else {
    write_grid_csv(out, cells);
  }
  return kExitOk;
}

// -- search / verify ---------------------------------------------------------------

void print_certificate_line(std::ostream& out, const PinchCertificate& c) {
  out << "  " << c.knot_before << " -> " << c.knot_after << "  w " << c.writhe_before << " -> " << c.writhe_after
      << "  sigma(C) = " << c.sigma_cover_cobordism << "  site " << to_json(c.site).dump()
      << (c.extended_model ? "  [extended model]" : "") << "\n";
}

void print_stats(std::ostream& out, const SearchStats& s) {
  out << "sites " << s.sites << ", certificates " << s.certificates << ", unidentifiable "
      << s.skipped_unidentifiable << ", filtered " << s.skipped_filter << ", non-knot " << s.errors_nonknot
      << ", invalid " << s.errors_invalid_site << ", other errors " << s.errors_other << "\n";
}

int cmd_search(const DiagramSource& src, SearchOptions opts, bool paper, const std::string& format,
               std::ostream& out) {
  if (opts.max_routing_length < 0 || opts.site_limit < 0 || opts.max_result_crossings < 0) {
    throw UsageError("budgets must be non-negative");
  }
  if (paper) {
    const PaperSearchReport r = find_paper_certificates(opts);
    if (format == "json") {
      out << dump(paper_report(r));
      return kExitOk;
    }
    for (const BatteryRun& run : r.runs) {
      out << run.entry.name << " -> " << run.entry.target << ": " << run.certificates.size()
          << " certificate(s); ";
      print_stats(out, run.stats);
    }
    out << "surfaces:\n";
    for (const LedgerOutcome& o : r.outcomes) {
      out << "  " << o.ledger.boundary << "  (e,h) = (" << (o.ledger.euler ? std::to_string(*o.ledger.euler) : "?")
          << "," << o.ledger.betti1 << ")  sigma(cover) = " << o.ledger.sigma_cover
          << (o.ledger.negative_definite() ? "  negative definite" : "") << (o.reversed ? "  via dual band" : "")
          << "\n";
    }
    for (const PaperGoal& g : r.goals) {
      out << g.description << ": " << (g.found ? "found" : "not found within budget") << "\n";
    }
    return kExitOk;
  }
  const Diagram d = src.load();
  const SearchResult r = pinch_search(d, opts);
  if (format == "json") {
    out << dump(search_report(d, opts, r));
    return kExitOk;
  }
  print_stats(out, r.stats);
  for (const PinchCertificate& c : r.certificates) print_certificate_line(out, c);
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& format, std::ostream& out) {
  const Json j = parse_json(DiagramSource::read_file(path));
  std::vector<PinchCertificate> certs;
  if (j.is_object() && j.contains("pd_before")) {
    certs.push_back(certificate_from_json(j));
  } else {
    certs = certificates_in_report(j);
  }
  if (certs.empty()) throw Error("no certificates in " + path);
  bool all_ok = true;
  Json reports = Json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const VerificationReport r = verify_certificate(certs[i]);
    all_ok = all_ok && r.ok();
    if (format == "json") {
      Json checks = Json::array();
      for (const CheckResult& c : r.checks) checks.push_back({{"field", c.field}, {"pass", c.pass}, {"detail", c.detail}});
      reports.push_back({{"index", i}, {"ok", r.ok()}, {"checks", checks}});
      continue;
    }
    out << "certificate " << i << ": " << (r.ok() ? "PASS" : "FAIL") << "\n";
    for (const CheckResult& c : r.checks) {
      if (!c.pass) out << "  " << c.field << ": " << c.detail << "\n";
    }
  }
  if (format == "json") out << dump(Json{{"ok", all_ok}, {"certificates", reports}});
  return all_ok ? kExitOk : kExitDomain;
}

// -- demo paper ----------------------------------------------------------------------

struct GoldenMove {
  const char* knot_before;
  const char* knot_after;
  int sigma_before;
  int sigma_after;
  int w_before;
  int w_after;
  int expected_euler;
};

// Quoted arithmetic of the two moves: unknot -> T(2,5) and 6_1 -> T(2,9).
constexpr GoldenMove kGoldenMoves[] = {
    {"unknot", "T(2,5)", 0, -4, 0, 6, -6},
    {"6_1", "T(2,9)", 0, -8, -5, 9, -14},
};

int cmd_demo(bool check_signatures, const std::string& format, std::ostream& out) {
  Json j = Json::object();
  Json checks = Json::array();
  bool all_ok = true;
  std::ostringstream text;
  auto check = [&](const std::string& what, bool pass) {
    all_ok = all_ok && pass;
    checks.push_back({{"check", what}, {"pass", pass}});
    text << (pass ? "  ok    " : "  FAIL  ") << what << "\n";
  };

  Json ledgers = Json::array();
  for (const GoldenMove& g : kGoldenMoves) {
    const Rational s = cobordism_sigma(g.sigma_before, g.sigma_after, g.w_before, g.w_after);
    text << g.knot_before << " -> " << g.knot_after << ": sigma(C) = (" << g.sigma_after << " - " << g.sigma_before
         << ") + (" << g.w_after << " - " << g.w_before << ")/2 = " << s.str() << "\n";
    check(std::string("sigma(C) = -1 for ") + g.knot_before + " -> " + g.knot_after, s == Rational(-1));
    const SurfaceLedger disk = base_ledger(knot_by_name(g.knot_before));
    const SurfaceLedger band = glue_step(disk, {g.knot_before, g.knot_after, g.sigma_after,
                                               static_cast<int>(s.num()), "golden move " + std::string(g.knot_before) +
                                                                              " -> " + g.knot_after});
    text << "  surface for " << band.boundary << ": (e,h) = (" << *band.euler << "," << band.betti1
         << "), sigma(cover) = " << band.sigma_cover << ", " << (band.orientable ? "orientable" : "non-orientable")
         << (band.negative_definite() ? ", negative definite" : "") << "\n";
    check("(e,h) = (" + std::to_string(g.expected_euler) + ",1) for " + g.knot_after,
          band.euler == g.expected_euler && band.betti1 == 1);
    check("sigma(cover) = -1, non-orientable, negative definite for " + std::string(g.knot_after),
          band.sigma_cover == -1 && !band.orientable && band.negative_definite());
    check("Gordon-Litherland consistency for " + std::string(g.knot_after), gl_consistent(band));
    ledgers.push_back(to_json(band));
  }
  j["ledgers"] = ledgers;

  Json minimal = Json::array();
  for (const auto& [n, expected] : {std::pair{5, std::vector<int>{-10, -6}}, std::pair{9, std::vector<int>{-18, -14}}}) {
    const MinimalPointReport before = minimal_points(n, false);
    const MinimalPointReport after = minimal_points(n, true);
    text << "T(2," << n << ") minimal points at h = " << after.gamma4 << ": before {";
    for (std::size_t i = 0; i < before.minimal_points.size(); ++i) text << (i ? "," : "") << before.minimal_points[i];
    text << "}, after {";
    for (std::size_t i = 0; i < after.minimal_points.size(); ++i) text << (i ? "," : "") << after.minimal_points[i];
    text << "}\n";
    check("T(2," + std::to_string(n) + ") has two minimal points", after.minimal_points == expected);
    check("T(2," + std::to_string(n) + ") had a single minimal point before", before.minimal_points.size() == 1);
    Json m = {{"n", n}, {"before", to_json(before)}, {"after", to_json(after)}};
    minimal.push_back(m);
  }
  j["minimal_points"] = minimal;

  if (check_signatures) {
    for (const auto& [name, golden] : {std::pair{"T(2,5)", -4}, std::pair{"T(2,9)", -8}, std::pair{"6_1", 0}}) {
      const int sigma = knot_signature(table_diagram(name)).sigma;
      text << "sigma(" << name << ") recomputed = " << sigma << "\n";
      check(std::string("sigma(") + name + ") = " + std::to_string(golden), sigma == golden);
    }
  }
  j["checks"] = checks;
  j["ok"] = all_ok;
  if (format == "json") {
    out << dump(j);
  } else {
    out << text.str() << (all_ok ? "all golden checks pass\n" : "golden check FAILED\n");
  }
  return all_ok ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pinchband: knot diagrams, Goeritz signatures, H(2)-moves and Moebius band bookkeeping"};
  app.require_subcommand(1);
  app.name("pinchband");
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

  std::string format = "text";

  DiagramSource inv_src;
  CLI::App* inv = app.add_subcommand("invariants", "signature, determinant, writhe, bracket and table match");
  inv_src.attach(inv);
  format_choice(inv, format, {"text", "json"});

  int n = 0, e = 0, h = 0;
  bool post = false;
  CLI::App* cls = app.add_subcommand("classify", "status of an (e,h) pair for T(2,n)");
  cls->add_option("n", n, "odd torus parameter")->required();
  cls->add_option("euler", e, "normal Euler number")->required();
  cls->add_option("betti1", h, "first Betti number")->required();
  cls->add_flag("--post", post, "include the two Moebius bands and their stabilizations");
  format_choice(cls, format, {"text", "json"});

  int e_min = 0, e_max = 0, h_min = 0, h_max = 0;
  CLI::App* grd = app.add_subcommand("grid", "dense status grid for T(2,n)");
  grd->add_option("n", n, "odd torus parameter")->required();
  grd->add_option("e_min", e_min)->required();
  grd->add_option("e_max", e_max)->required();
  grd->add_option("h_min", h_min)->required();
  grd->add_option("h_max", h_max)->required();
  grd->add_flag("--post", post, "include the two Moebius bands and their stabilizations");
  format_choice(grd, format, {"csv", "text", "json"});

  DiagramSource search_src;
  SearchOptions opts;
  std::string target;
  std::optional<int> target_sigma;
  bool paper = false;
  CLI::App* srch = app.add_subcommand("search", "enumerate H(2)-moves and emit verified certificates");
  search_src.attach(srch);
  srch->add_option("--max-routing", opts.max_routing_length, "longest band routing");
  srch->add_option("--site-limit", opts.site_limit, "cap on enumerated sites");
  srch->add_option("--max-crossings", opts.max_result_crossings, "crossing budget of move results");
  srch->add_option("--target", target, "keep moves ending at this table knot");
  srch->add_option("--target-sigma", target_sigma, "keep moves with this cobordism signature");
  srch->add_flag("--paper", paper, "run the battery for the T(2,5) and T(2,9) Moebius bands");
  format_choice(srch, format, {"text", "json"});

  std::string cert_path;
  CLI::App* ver = app.add_subcommand("verify", "re-check a certificate file or search report");
  ver->add_option("file", cert_path)->required();
  format_choice(ver, format, {"text", "json"});

  std::string demo_name;
  bool check_signatures = false;
  CLI::App* demo = app.add_subcommand("demo", "reproduce the two Moebius band ledgers");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"paper"}));
  demo->add_flag("--check-signatures", check_signatures, "recompute the golden signatures from diagrams");
  format_choice(demo, format, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(inv_src, format, out);
    if (*cls) return cmd_classify(n, e, h, post, format, out);
    if (*grd) return cmd_grid(n, e_min, e_max, h_min, h_max, post, format == "text" && !grd->count("--format") ? "csv" : format, out);
    if (*srch) {
      if (!target.empty()) opts.target_knot = target;
      opts.target_sigma_cover = target_sigma;
      return cmd_search(search_src, opts, paper, format, out);
    }
    if (*ver) return cmd_verify(cert_path, format, out);
    if (*demo) return cmd_demo(check_signatures, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace pinchband
