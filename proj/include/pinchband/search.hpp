#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinchband/cobordism.hpp"

namespace pinchband {

struct SearchOptions {
  int max_routing_length = 0;
  std::optional<std::string> target_knot;
  std::optional<int> target_sigma_cover;
  int max_result_crossings = 24;
  std::int64_t site_limit = 100000;
  unsigned threads = 0;  // 0: one per hardware thread
};

/// Every (P, Q) attachment pair with P < Q, both clasp signs, the empty
/// routing, and every nonempty routing of length <= max_routing_length whose
/// face path is valid for the pair. Sorted by (P, Q, clasp +1 first, routing
/// length, routing word); truncated at site_limit.
std::vector<H2MoveSite> enumerate_sites(const Diagram& d, const SearchOptions& opts);

/// Number of unordered attachment pairs on a diagram with `edges` edges:
/// four side choices for each pair of distinct edges and for each single edge.
std::int64_t attachment_pair_count(int edges);

struct SearchStats {
  std::int64_t sites = 0;
  std::int64_t certificates = 0;
  std::int64_t skipped_unidentifiable = 0;
  std::int64_t skipped_filter = 0;  // target mismatch or crossing budget
  std::int64_t errors_nonknot = 0;
  std::int64_t errors_invalid_site = 0;
  std::int64_t errors_other = 0;  // anything unexpected; zero on a correct build

  bool conserved() const {
    return sites == certificates + skipped_unidentifiable + skipped_filter + errors_nonknot + errors_invalid_site +
                        errors_other;
  }
};

struct SearchResult {
  std::vector<PinchCertificate> certificates;  // in enumeration order
  SearchStats stats;
};

SearchResult pinch_search(const Diagram& d, const SearchOptions& opts);

// -- the two Moebius band targets ------------------------------------------------

struct BatteryEntry {
  std::string name;  // e.g. "T(2,5) + finger 1L/3"
  Diagram diagram;
  std::string target;
};

/// Standard and R1/R2-inflated diagrams of T(2,5), T(2,9), 6_1 and the unknot,
/// each paired with the knot across the sought move.
std::vector<BatteryEntry> paper_battery();

struct BatteryRun {
  BatteryEntry entry;
  SearchStats stats;
  std::vector<PinchCertificate> certificates;
};

/// A certificate oriented from a slice knot towards T(2,n), with the surface
/// obtained by capping the slice end with a disk.
struct LedgerOutcome {
  PinchCertificate certificate;
  bool reversed = false;  // obtained from a found move through its dual band
  SurfaceLedger ledger;
};

struct PaperGoal {
  std::string description;
  std::string torus;  // "T(2,5)" or "T(2,9)"
  int euler = 0;      // sought normal Euler number at b1 = 1
  bool found = false;
};

struct PaperSearchReport {
  SearchOptions options;
  std::vector<BatteryRun> runs;
  std::vector<LedgerOutcome> outcomes;  // distinct by (pd_before, pd_after)
  std::vector<PaperGoal> goals;
};

PaperSearchReport find_paper_certificates(const SearchOptions& opts);
PaperSearchReport find_paper_certificates(const SearchOptions& opts, const std::vector<BatteryEntry>& battery);

}  // namespace pinchband
