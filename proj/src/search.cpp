#include "pinchband/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "pinchband/errors.hpp"
#include "pinchband/goeritz.hpp"

namespace pinchband {

namespace {

auto step_key(const RouteStep& s) { return std::pair(s.edge, static_cast<int>(s.level)); }

bool word_less(const std::vector<RouteStep>& a, const std::vector<RouteStep>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const RouteStep& x, const RouteStep& y) { return step_key(x) < step_key(y); });
}

/// All simple face paths of length 1..max_len from `from` to `to` that avoid
/// the forbidden edges, expanded over both levels at every step.
std::vector<std::vector<RouteStep>> routings(const FaceStructure& fs, int edges, int from, int to, int max_len,
                                             const std::set<int>& forbidden) {
  std::vector<std::vector<int>> paths;
  std::vector<int> path;
  std::set<int> used_edges;
  std::set<int> visited{from};
  auto dfs = [&](auto&& self, int face) -> void {
    if (static_cast<int>(path.size()) == max_len) return;
    for (int e = 1; e <= edges; ++e) {
      if (forbidden.contains(e) || used_edges.contains(e)) continue;
      const int l = fs.face_of({e, Side::left});
      const int r = fs.face_of({e, Side::right});
      int next;
      if (face == l) next = r;
      else if (face == r) next = l;
      else continue;
      if (visited.contains(next)) continue;
      path.push_back(e);
      if (next == to) {
        paths.push_back(path);
      } else {
        used_edges.insert(e);
        visited.insert(next);
        self(self, next);
        visited.erase(next);
        used_edges.erase(e);
      }
      path.pop_back();
    }
  };
  dfs(dfs, from);

  std::vector<std::vector<RouteStep>> out;
  for (const auto& p : paths) {
    const std::uint32_t combos = 1u << p.size();
    for (std::uint32_t mask = 0; mask < combos; ++mask) {
      std::vector<RouteStep> w;
      for (std::size_t i = 0; i < p.size(); ++i) {
        w.push_back({p[i], ((mask >> (p.size() - 1 - i)) & 1u) ? Level::under : Level::over});
      }
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

enum class Outcome { certificate, unidentifiable, filtered, nonknot, invalid, other };

struct Evaluation {
  Outcome outcome = Outcome::other;
  std::optional<PinchCertificate> certificate;
};

}  // namespace

std::int64_t attachment_pair_count(int edges) { return 2LL * edges * (edges + 1); }

std::vector<H2MoveSite> enumerate_sites(const Diagram& d, const SearchOptions& opts) {
  std::vector<H2MoveSite> out;
  if (opts.site_limit <= 0) return out;
  const int edges = d.attachable_edges();
  const FaceStructure fs = face_structure(orient(d));
  auto full = [&] { return static_cast<std::int64_t>(out.size()) >= opts.site_limit; };

  for (int a = 1; a <= edges; ++a) {
    for (const Side sp : {Side::left, Side::right}) {
      const Attachment p{a, sp, 0};
      std::vector<Attachment> partners{{a, Side::left, 1}, {a, Side::right, 1}};
      for (int b = a + 1; b <= edges; ++b) {
        partners.push_back({b, Side::left, 0});
        partners.push_back({b, Side::right, 0});
      }
      for (const Attachment& q : partners) {
        std::vector<std::vector<RouteStep>> words{{}};
        if (opts.max_routing_length > 0) {
          auto more = routings(fs, edges, fs.face_of({p.edge, p.side}), fs.face_of({q.edge, q.side}),
                               opts.max_routing_length, {p.edge, q.edge});
          words.insert(words.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
        }
        for (const int clasp : {1, -1}) {
          for (const auto& w : words) {
            if (full()) return out;
            out.push_back({{p, q}, w, clasp});
          }
        }
      }
    }
  }
  return out;
}

SearchResult pinch_search(const Diagram& d, const SearchOptions& opts) {
  SearchResult result;
  const std::vector<H2MoveSite> sites = enumerate_sites(d, opts);
  std::optional<std::string> target;
  if (opts.target_knot) target = knot_by_name(*opts.target_knot).name;

  const Identification before = identify(d);
  const int w_before = writhe(d);

  auto evaluate = [&](const H2MoveSite& site) -> Evaluation {
    try {
      const Diagram after = apply_h2(d, site);
      if (after.crossing_count() > opts.max_result_crossings) return {Outcome::filtered, {}};
      const Identification id = identify(after);
      if (before.kind != Identification::Kind::known || id.kind != Identification::Kind::known) {
        return {Outcome::unidentifiable, {}};
      }
      if (target && id.knot->name != *target) return {Outcome::filtered, {}};
      PinchCertificate c;
      c.pd_before = d;
      c.pd_after = after;
      c.site = site;
      c.knot_before = before.knot->name;
      c.knot_after = id.knot->name;
      c.writhe_before = w_before;
      c.writhe_after = writhe(after);
      c.sigma_before = before.knot->fingerprint.signature;
      c.sigma_after = id.knot->fingerprint.signature;
      const Rational s = cobordism_sigma(c.sigma_before, c.sigma_after, c.writhe_before, c.writhe_after);
      if (!s.is_integer()) return {Outcome::other, {}};
      c.sigma_cover_cobordism = static_cast<int>(s.num());
      c.extended_model = !site.routing.empty();
      if (opts.target_sigma_cover && c.sigma_cover_cobordism != *opts.target_sigma_cover) {
        return {Outcome::filtered, {}};
      }
      if (!verify_certificate(c).ok()) return {Outcome::other, {}};
      return {Outcome::certificate, std::move(c)};
    } catch (const NonKnotResult&) {
      return {Outcome::nonknot, {}};
    } catch (const InvalidSite&) {
      return {Outcome::invalid, {}};
    } catch (const Error&) {
      return {Outcome::other, {}};
    }
  };

  std::vector<Evaluation> evals(sites.size());
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, sites.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sites.size(); i = next++) evals[i] = evaluate(sites[i]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchStats& st = result.stats;
  st.sites = static_cast<std::int64_t>(sites.size());
  for (Evaluation& e : evals) {
    switch (e.outcome) {
      case Outcome::certificate:
        ++st.certificates;
        result.certificates.push_back(std::move(*e.certificate));
        break;
      case Outcome::unidentifiable: ++st.skipped_unidentifiable; break;
      case Outcome::filtered: ++st.skipped_filter; break;
      case Outcome::nonknot: ++st.errors_nonknot; break;
      case Outcome::invalid: ++st.errors_invalid_site; break;
      case Outcome::other: ++st.errors_other; break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// battery

namespace {

/// First few single-step R2 fingers pushed off edge 1, in enumeration order.
std::vector<std::pair<std::string, Diagram>> fingers(const Diagram& d, int count) {
  std::vector<std::pair<std::string, Diagram>> out;
  for (int e = 2; e <= d.attachable_edges() && static_cast<int>(out.size()) < count; ++e) {
    for (const Side s : {Side::left, Side::right}) {
      if (static_cast<int>(out.size()) >= count) break;
      try {
        Diagram f = insert_finger(d, {1, s, 0}, {{e, Level::over}});
        out.emplace_back("finger 1" + std::string(s == Side::left ? "L" : "R") + " over " + std::to_string(e),
                         std::move(f));
      } catch (const InvalidSite&) {
      }
    }
  }
  return out;
}

bool is_torus_target(const std::string& name) { return name == "T(2,5)" || name == "T(2,9)"; }

}  // namespace

std::vector<BatteryEntry> paper_battery() {
  std::vector<BatteryEntry> out;
  auto add_family = [&out](const std::string& name, const Diagram& base, const std::vector<std::string>& targets) {
    std::vector<std::pair<std::string, Diagram>> variants{{name, base}};
    if (base.crossing_count() > 0) {
      variants.emplace_back(name + " + kink(+1)", insert_curl(base, 1, 1, Side::left));
      variants.emplace_back(name + " + kink(-1)", insert_curl(base, 1, -1, Side::right));
      for (auto& [label, f] : fingers(base, 2)) variants.emplace_back(name + " + " + label, std::move(f));
    } else {
      const Diagram kink_pos = insert_curl(base, 1, 1, Side::left);
      const Diagram kink_neg = insert_curl(base, 1, -1, Side::left);
      variants.emplace_back(name + " + kink(+1)", kink_pos);
      variants.emplace_back(name + " + kink(-1)", kink_neg);
      variants.emplace_back(name + " + kinks(+1,+1)", insert_curl(kink_pos, 1, 1, Side::right));
      variants.emplace_back(name + " + kinks(-1,-1)", insert_curl(kink_neg, 1, -1, Side::right));
      variants.emplace_back(name + " + kinks(+1,-1)", insert_curl(kink_pos, 1, -1, Side::right));
    }
    for (auto& [label, diagram] : variants) {
      for (const auto& t : targets) out.push_back({label, diagram, t});
    }
  };
  add_family("T(2,5)", table_diagram("T(2,5)"), {"unknot"});
  add_family("unknot", table_diagram("unknot"), {"T(2,5)"});
  add_family("T(2,9)", table_diagram("T(2,9)"), {"6_1", "m6_1"});
  add_family("6_1", table_diagram("6_1"), {"T(2,9)"});
  add_family("m6_1", table_diagram("m6_1"), {"T(2,9)"});
  return out;
}

PaperSearchReport find_paper_certificates(const SearchOptions& opts) {
  return find_paper_certificates(opts, paper_battery());
}

PaperSearchReport find_paper_certificates(const SearchOptions& opts, const std::vector<BatteryEntry>& battery) {
  PaperSearchReport report;
  report.options = opts;
  report.goals = {{"Moebius band for T(2,5) with e = -6", "T(2,5)", -6, false},
                  {"Moebius band for T(2,9) with e = -14", "T(2,9)", -14, false}};
  // Battery entries share diagrams across targets; search each diagram once.
  std::map<std::string, SearchResult> cache;
  std::set<std::pair<std::string, std::string>> seen;

  for (const BatteryEntry& entry : battery) {
    const std::string key = emit_pd(entry.diagram);
    auto it = cache.find(key);
    if (it == cache.end()) {
      SearchOptions untargeted = opts;
      untargeted.target_knot.reset();
      untargeted.target_sigma_cover.reset();
      it = cache.emplace(key, pinch_search(entry.diagram, untargeted)).first;
    }
    BatteryRun run{entry, it->second.stats, {}};
    const std::string target = knot_by_name(entry.target).name;
    for (const PinchCertificate& c : it->second.certificates) {
      if (c.knot_after != target) continue;
      if (opts.target_sigma_cover && c.sigma_cover_cobordism != *opts.target_sigma_cover) continue;
      run.certificates.push_back(c);

      // Orient from the slice end towards the torus knot, reversing through
      // the dual band when the found move runs the other way.
      LedgerOutcome o;
      if (is_torus_target(c.knot_after)) {
        o.certificate = c;
      } else {
        try {
          o.certificate = make_certificate(c.pd_after, reverse_site(c.pd_before, c.site));
          o.reversed = true;
        } catch (const Error&) {
          continue;
        }
        if (o.certificate.knot_after != c.knot_before || !verify_certificate(o.certificate).ok()) continue;
      }
      const KnotId& slice_end = knot_by_name(o.certificate.knot_before);
      if (!slice_end.slice) continue;
      if (!seen.insert({emit_pd(o.certificate.pd_before), emit_pd(o.certificate.pd_after)}).second) continue;
      o.ledger = glue_pinch(base_ledger(slice_end), o.certificate);
      for (PaperGoal& g : report.goals) {
        if (o.ledger.boundary == g.torus && o.ledger.euler == g.euler && o.ledger.betti1 == 1) g.found = true;
      }
      report.outcomes.push_back(std::move(o));
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

}  // namespace pinchband
