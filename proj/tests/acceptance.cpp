// One PASS/FAIL line per acceptance criterion. Time limits are wall-clock
// seconds on the build machine and are part of each criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pinchband/cli.hpp"
#include "pinchband/goeritz.hpp"
#include "pinchband/realizability.hpp"
#include "pinchband/search.hpp"
#include "pinchband/serialize.hpp"
#include "random_diagrams.hpp"

using namespace pinchband;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> body;
};

Outcome gl_golden() {
  std::ostringstream d;
  bool ok = true;
  for (const int n : {3, 5, 7, 9, 11}) {
    const int sigma = knot_signature(torus_2n_diagram(n)).sigma;
    const int seifert = oracle::descartes_signature(oracle::torus_symmetrized_seifert(n));
    ok = ok && sigma == -(n - 1) && seifert == sigma;
    d << "sigma(T(2," << n << "))=" << sigma << " ";
  }
  const SignatureReport s61 = knot_signature(table_diagram("6_1"));
  ok = ok && s61.sigma == 0 && s61.determinant == 9;
  d << "sigma(6_1)=" << s61.sigma << " det(6_1)=" << s61.determinant;
  return {ok, d.str()};
}

Outcome cobordism_arithmetic() {
  const Rational a = cobordism_sigma(0, -4, 0, 6);
  const Rational b = cobordism_sigma(0, -8, -5, 9);
  return {a == Rational(-1) && b == Rational(-1), "(0,-4,0,6) -> " + a.str() + ", (0,-8,-5,9) -> " + b.str()};
}

Outcome ledger_reproduction() {
  std::ostringstream out, err;
  const int code = run_cli({"demo", "paper", "--format", "json"}, out, err);
  const Json j = parse_json(out.str());
  bool ok = code == kExitOk && j.at("ok") == true && j.at("ledgers").size() == 2;
  std::ostringstream d;
  d << "exit " << code;
  const int expected[2] = {-6, -14};
  for (std::size_t i = 0; ok && i < 2; ++i) {
    const Json& l = j.at("ledgers")[i];
    ok = l.at("euler") == expected[i] && l.at("betti1") == 1 && l.at("sigma_cover") == -1 &&
         l.at("orientable") == false && l.at("negative_definite") == true;
    d << "; " << l.at("boundary").get<std::string>() << " (e,h)=(" << l.at("euler") << "," << l.at("betti1")
      << ") sigma(cover)=" << l.at("sigma_cover");
  }
  return {ok, d.str()};
}

std::set<std::pair<int, int>> unknown_cells(int n, bool post) {
  std::set<std::pair<int, int>> out;
  for (const GridCell& c : grid(n, -12, 4, 0, 6, post)) {
    if (c.status.verdict == Verdict::unknown) out.insert({c.e, c.h});
  }
  return out;
}

Outcome classifier_exactness() {
  const std::set<std::pair<int, int>> n5{{-6, 1}, {-4, 2}, {-2, 3}, {0, 4}};
  const std::set<std::pair<int, int>> n7{{-6, 3}, {-4, 4}, {-2, 5}, {0, 6}};
  const auto u5 = unknown_cells(5, false), u7 = unknown_cells(7, false);
  const auto p5 = unknown_cells(5, true), p7 = unknown_cells(7, true);
  std::ostringstream d;
  d << "pre: " << u5.size() << " (n=5), " << u7.size() << " (n=7) unknown; post: " << p5.size() + p7.size();
  return {u5 == n5 && u7 == n7 && p5.empty() && p7.empty(), d.str()};
}

Outcome closure_agreement() {
  const std::set<Triple> closure = stabilize_closure({{5, -6, 1}, {9, -14, 1}}, 15, 20);
  std::set<Triple> upgraded, closed_unknown;
  for (int n = 5; n <= 15; n += 2) {
    for (int e = -2 * n - 4; e <= 2 * n + 4; ++e) {
      for (int h = 0; h <= 20; ++h) {
        if (status_allen({n, e, h}).verdict != Verdict::unknown) continue;
        if (status_post({n, e, h}).verdict == Verdict::realizable) upgraded.insert({n, e, h});
        if (closure.count({n, e, h})) closed_unknown.insert({n, e, h});
      }
    }
  }
  const bool spot = status_post({13, -14, 5}).verdict == Verdict::realizable &&
                    status_post({13, -22, 1}).verdict == Verdict::unknown;
  std::ostringstream d;
  d << upgraded.size() << " upgraded pairs, " << closed_unknown.size()
    << " closure pairs among the pre-paper unknowns; (13,-14,5) Realizable, (13,-22,1) Unknown: "
    << (spot ? "yes" : "no");
  return {spot && !upgraded.empty() && upgraded == closed_unknown, d.str()};
}

Outcome minimal_multiplicity() {
  const auto a = minimal_points(5, true).minimal_points;
  const auto b = minimal_points(9, true).minimal_points;
  std::ostringstream d;
  d << "n=5: {";
  for (std::size_t i = 0; i < a.size(); ++i) d << (i ? "," : "") << a[i];
  d << "}, n=9: {";
  for (std::size_t i = 0; i < b.size(); ++i) d << (i ? "," : "") << b[i];
  d << "}";
  return {a == std::vector<int>{-10, -6} && b == std::vector<int>{-18, -14}, d.str()};
}

Outcome signature_kernel() {
  std::mt19937 rng(20260701);
  int agree = 0;
  constexpr int kTrials = 500;
  for (int i = 0; i < kTrials; ++i) {
    const int dim = 1 + static_cast<int>(rng() % 8);
    const IntMatrix m = testgen::random_symmetric(rng, dim, -5, 5);
    agree += matrix_signature(m) == oracle::descartes_signature(m);
  }
  return {agree == kTrials, std::to_string(agree) + "/" + std::to_string(kTrials) + " agree with the Descartes oracle"};
}

Outcome coloring_and_mirror() {
  std::vector<Diagram> ds;
  for (const std::string& name : table_names()) {
    ds.push_back(table_diagram(name));
    ds.push_back(table_diagram("m" + name));
  }
  std::mt19937 rng(20260702);
  for (int i = 0; i < 200; ++i) ds.push_back(testgen::random_knot(rng, 10));
  int pass = 0;
  for (const Diagram& d : ds) {
    const SignatureReport r = knot_signature(d);
    const bool colorings = r.colorings[0].form_signature - r.colorings[0].correction ==
                           r.colorings[1].form_signature - r.colorings[1].correction;
    pass += colorings && knot_signature(mirror(d)).sigma == -r.sigma;
  }
  return {pass == static_cast<int>(ds.size()), std::to_string(pass) + "/" + std::to_string(ds.size()) + " diagrams"};
}

Outcome search_smoke() {
  SearchOptions opts;
  opts.target_knot = "unknot";
  const Diagram d = torus_2n_diagram(5);
  const SearchResult a = pinch_search(d, opts);
  const SearchResult b = pinch_search(d, opts);
  bool verified = true;
  for (const PinchCertificate& c : a.certificates) verified = verified && verify_certificate(c).ok();
  const bool deterministic = a.certificates == b.certificates;
  std::ostringstream d2;
  d2 << a.certificates.size() << " certificates, all verified: " << (verified ? "yes" : "no")
     << ", deterministic: " << (deterministic ? "yes" : "no");
  return {!a.certificates.empty() && verified && deterministic, d2.str()};
}

Outcome paper_property_suite() {
  SearchOptions opts;
  opts.max_routing_length = 2;
  const PaperSearchReport r = find_paper_certificates(opts);
  bool ok = true;
  std::size_t count = 0;
  auto check = [&](const PinchCertificate& c) {
    ++count;
    const Rational s = cobordism_sigma(c.sigma_before, c.sigma_after, c.writhe_before, c.writhe_after);
    ok = ok && s.is_integer() && s == Rational(c.sigma_cover_cobordism) && std::abs(c.sigma_cover_cobordism) <= 1 &&
         c.b2_cover == 1;
  };
  for (const BatteryRun& run : r.runs) {
    for (const PinchCertificate& c : run.certificates) check(c);
  }
  for (const LedgerOutcome& o : r.outcomes) check(o.certificate);
  std::ostringstream d;
  d << count << " certificates checked at routing <= 2";
  for (const PaperGoal& g : r.goals) d << "; " << g.description << ": " << (g.found ? "found" : "not found within budget");
  return {ok && r.goals.size() == 2, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Gordon-Litherland signature golden values", 5, gl_golden},
      {2, "cobordism signature arithmetic", 0, cobordism_arithmetic},
      {3, "Moebius band ledgers from demo paper", 5, ledger_reproduction},
      {4, "classifier exactness on the n=5 and n=7 grids", 1, classifier_exactness},
      {5, "stabilization closure matches the closed form", 0, closure_agreement},
      {6, "two minimal points for T(2,5) and T(2,9)", 0, minimal_multiplicity},
      {7, "exact signature kernel vs root-sign oracle", 10, signature_kernel},
      {8, "coloring independence and mirror antisymmetry", 0, coloring_and_mirror},
      {9, "pinch search smoke test from T(2,5)", 30, search_smoke},
      {10, "certificate battery runs to completion with valid certificates", 120, paper_property_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ["
              << std::fixed << std::setprecision(3) << seconds << " s";
    if (c.limit_seconds > 0) std::cout << " < " << std::setprecision(0) << c.limit_seconds << " s";
    std::cout << (in_time ? "" : " EXCEEDED") << "]  " << o.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
