#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace pinchband {

/// A candidate (normal Euler number, first Betti number) pair for a
/// non-orientable surface in the 4-ball bounded by T(2,n).
struct PairQuery {
  int n = 5;
  int e = 0;
  int h = 0;
};

enum class Verdict { realizable, unknown, not_realizable };
std::string_view to_string(Verdict v);

struct PairStatus {
  Verdict verdict = Verdict::not_realizable;
  std::string clause;     // ASCII form of the matching set expression
  std::optional<int> m;   // witness parameters of the clause, when it has them
  std::optional<int> l;
};

/// Classification known before the two Moebius bands: realizable sets
/// (-2n +- 2m, 1+m+2l) and (2+2m, n+m); unknown (4-2n+2m, 1+m), 0 <= m < n-1
/// for n = 1 mod 4, and (8-2n+2m, 3+m), 0 <= m < n-3 for n = 3 mod 4; all
/// else not realizable. Realizable wins on overlap. Throws InvalidN unless n
/// is odd and at least 3.
PairStatus status_allen(const PairQuery& q);

/// As status_allen, with the unknown points at m >= n-9 (n = 1 mod 4) or
/// m >= n-11 (n = 3 mod 4) upgraded to realizable.
PairStatus status_post(const PairQuery& q);

PairStatus classify(const PairQuery& q, bool post);

using Triple = std::tuple<int, int, int>;  // (n, e, h)

/// Least fixed point of (n,e,h) -> (n,e+2,h+1) and (n,e,h) -> (n+2,e,h+2)
/// over the seeds, restricted to n <= n_max and h <= h_max.
std::set<Triple> stabilize_closure(const std::set<Triple>& seeds, int n_max, int h_max);

struct MinimalPointReport {
  int gamma4 = 0;
  std::vector<int> minimal_points;  // ascending
  int g4_orientable = 0;            // (n-1)/2
};

/// Scans h upward from 0 and e over [-2n-2, 2n+2] for the least h carrying a
/// realizable pair, and lists every realizable e at that h.
MinimalPointReport minimal_points(int n, bool post);

struct GridCell {
  int n = 0;
  int e = 0;
  int h = 0;
  PairStatus status;
};

/// Rows ordered by h, then e, both ascending.
std::vector<GridCell> grid(int n, int e_min, int e_max, int h_min, int h_max, bool post);

/// Header `n,e,h,status,clause`, LF line endings, fields with commas quoted.
void write_grid_csv(std::ostream& os, const std::vector<GridCell>& cells);

}  // namespace pinchband
