#include "pinchband/realizability.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "pinchband/errors.hpp"

namespace pinchband {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::realizable: return "Realizable";
    case Verdict::unknown: return "Unknown";
    case Verdict::not_realizable: return "NotRealizable";
  }
  return "?";
}

namespace {

void check_n(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidN("n must be odd and at least 3, got " + std::to_string(n));
}

int mod4(int n) { return ((n % 4) + 4) % 4; }

/// The unknown family for n: (base + 2m, h0 + m) for 0 <= m < bound.
struct UnknownFamily {
  int base;
  int h0;
  int bound;
  const char* clause;
  int first_upgraded;  // smallest m covered after the Moebius bands
};

UnknownFamily unknown_family(int n) {
  if (mod4(n) == 1) return {4 - 2 * n, 1, n - 1, "(4-2n+2m, 1+m)", std::max(0, n - 9)};
  return {8 - 2 * n, 3, n - 3, "(8-2n+2m, 3+m)", std::max(0, n - 11)};
}

std::optional<PairStatus> realizable_sets(const PairQuery& q) {
  const int d = q.e + 2 * q.n;
  if (d % 2 == 0) {
    const int m = std::abs(d) / 2;
    const int rest = q.h - 1 - m;
    if (rest >= 0 && rest % 2 == 0) {
      return PairStatus{Verdict::realizable, "(-2n+-2m, 1+m+2l)", m, rest / 2};
    }
  }
  if (q.e >= 2 && q.e % 2 == 0) {
    const int m = (q.e - 2) / 2;
    if (q.h == q.n + m) return PairStatus{Verdict::realizable, "(2+2m, n+m)", m, std::nullopt};
  }
  return std::nullopt;
}

std::optional<int> unknown_m(const PairQuery& q, const UnknownFamily& f) {
  const int d = q.e - f.base;
  if (d < 0 || d % 2 != 0) return std::nullopt;
  const int m = d / 2;
  if (m >= f.bound || q.h != f.h0 + m) return std::nullopt;
  return m;
}

}  // namespace

PairStatus status_allen(const PairQuery& q) {
  check_n(q.n);
  if (q.h <= 0) return {Verdict::not_realizable, "h = 0: torus knots bound no disk", {}, {}};
  if (auto r = realizable_sets(q)) return *r;
  const UnknownFamily f = unknown_family(q.n);
  if (auto m = unknown_m(q, f)) return {Verdict::unknown, f.clause, *m, std::nullopt};
  return {Verdict::not_realizable, "outside every listed set", {}, {}};
}

PairStatus status_post(const PairQuery& q) {
  PairStatus s = status_allen(q);
  if (s.verdict != Verdict::unknown) return s;
  const UnknownFamily f = unknown_family(q.n);
  if (*s.m >= f.first_upgraded) {
    s.verdict = Verdict::realizable;
    s.clause = std::string(f.clause) + ", m >= " + std::to_string(f.first_upgraded) + " via stabilized Moebius bands";
  }
  return s;
}

PairStatus classify(const PairQuery& q, bool post) { return post ? status_post(q) : status_allen(q); }

std::set<Triple> stabilize_closure(const std::set<Triple>& seeds, int n_max, int h_max) {
  std::set<Triple> out;
  std::deque<Triple> queue;
  auto push = [&](const Triple& t) {
    const auto [n, e, h] = t;
    if (n > n_max || h > h_max) return;
    if (out.insert(t).second) queue.push_back(t);
  };
  for (const Triple& s : seeds) push(s);
  while (!queue.empty()) {
    const auto [n, e, h] = queue.front();
    queue.pop_front();
    push({n, e + 2, h + 1});
    push({n + 2, e, h + 2});
  }
  return out;
}

MinimalPointReport minimal_points(int n, bool post) {
  check_n(n);
  MinimalPointReport r;
  r.g4_orientable = (n - 1) / 2;
  // (-2n, 1) is always realizable, so the scan stops at h = 1 at the latest.
  for (int h = 0; r.minimal_points.empty(); ++h) {
    for (int e = -2 * n - 2; e <= 2 * n + 2; ++e) {
      if (classify({n, e, h}, post).verdict == Verdict::realizable) r.minimal_points.push_back(e);
    }
    r.gamma4 = h;
  }
  return r;
}

std::vector<GridCell> grid(int n, int e_min, int e_max, int h_min, int h_max, bool post) {
  check_n(n);
  std::vector<GridCell> cells;
  for (int h = h_min; h <= h_max; ++h) {
    for (int e = e_min; e <= e_max; ++e) cells.push_back({n, e, h, classify({n, e, h}, post)});
  }
  return cells;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_grid_csv(std::ostream& os, const std::vector<GridCell>& cells) {
  os << "n,e,h,status,clause\n";
  for (const GridCell& c : cells) {
    os << c.n << ',' << c.e << ',' << c.h << ',' << to_string(c.status.verdict) << ',' << csv_field(c.status.clause)
       << '\n';
  }
}

}  // namespace pinchband
