#include "pinchband/goeritz.hpp"

#include <gmpxx.h>

#include <deque>
#include <stdexcept>

#include "pinchband/errors.hpp"

namespace pinchband {

namespace {

Coloring classify_crossings(const OrientedDiagram& od, const FaceStructure& fs, std::vector<Shade> shade) {
  Coloring col;
  col.shade = std::move(shade);
  const int n = od.diagram.crossing_count();
  col.incidence.resize(static_cast<std::size_t>(n));
  col.type.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const auto& corners = fs.corner_faces[static_cast<std::size_t>(c)];
    auto corner_shade = [&](int k) { return col.shade[static_cast<std::size_t>(corners[static_cast<std::size_t>(k)])]; };
    if (corner_shade(0) != corner_shade(2) || corner_shade(1) != corner_shade(3) || corner_shade(0) == corner_shade(1)) {
      throw PlanarityError("improper checkerboard shading at crossing " + std::to_string(c));
    }
    col.incidence[static_cast<std::size_t>(c)] = corner_shade(0) == Shade::white ? 1 : -1;
    const int under_out = (od.under_in[static_cast<std::size_t>(c)] + 2) % 4;
    const int over_out = (od.over_in[static_cast<std::size_t>(c)] + 2) % 4;
    const int between = (under_out + 1) % 4 == over_out ? under_out : over_out;
    col.type[static_cast<std::size_t>(c)] = corner_shade(between) == Shade::black ? CrossingType::II : CrossingType::I;
  }
  return col;
}

}  // namespace

std::array<Coloring, 2> checkerboard(const Diagram& d) {
  const OrientedDiagram od = orient(d);
  const FaceStructure fs = face_structure(od);
  const int nf = static_cast<int>(fs.faces.size());

  // Face adjacency across edges.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nf));
  for (const auto& ef : fs.edge_faces) {
    adj[static_cast<std::size_t>(ef[0])].push_back(ef[1]);
    adj[static_cast<std::size_t>(ef[1])].push_back(ef[0]);
  }
  std::vector<int> color(static_cast<std::size_t>(nf), -1);
  const int root = fs.face_of({1, Side::left});
  color[static_cast<std::size_t>(root)] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const int g : adj[static_cast<std::size_t>(f)]) {
      if (color[static_cast<std::size_t>(g)] < 0) {
        color[static_cast<std::size_t>(g)] = 1 - color[static_cast<std::size_t>(f)];
        queue.push_back(g);
      } else if (color[static_cast<std::size_t>(g)] == color[static_cast<std::size_t>(f)]) {
        throw PlanarityError("face graph is not bipartite");
      }
    }
  }
  std::vector<Shade> first(static_cast<std::size_t>(nf));
  std::vector<Shade> second(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) {
    if (color[static_cast<std::size_t>(f)] < 0) throw PlanarityError("face graph is disconnected");
    first[static_cast<std::size_t>(f)] = color[static_cast<std::size_t>(f)] == 0 ? Shade::white : Shade::black;
    second[static_cast<std::size_t>(f)] = color[static_cast<std::size_t>(f)] == 0 ? Shade::black : Shade::white;
  }
  return {classify_crossings(od, fs, std::move(first)), classify_crossings(od, fs, std::move(second))};
}

GoeritzForm goeritz_matrix(const Diagram& d, const Coloring& coloring) {
  const OrientedDiagram od = orient(d);
  const FaceStructure fs = face_structure(od);
  GoeritzForm g;
  g.coloring = coloring;

  std::vector<int> row_of(fs.faces.size(), -1);
  std::vector<int> whites;
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (coloring.shade.at(static_cast<std::size_t>(f)) == Shade::white) {
      row_of[static_cast<std::size_t>(f)] = static_cast<int>(whites.size());
      whites.push_back(f);
    }
  }
  const std::size_t w = whites.size();
  IntMatrix full(w, std::vector<std::int64_t>(w, 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& corners = fs.corner_faces[static_cast<std::size_t>(c)];
    const int eta = coloring.incidence[static_cast<std::size_t>(c)];
    const int k = eta > 0 ? 0 : 1;  // a white corner
    const auto i = static_cast<std::size_t>(row_of[static_cast<std::size_t>(corners[static_cast<std::size_t>(k)])]);
    const auto j = static_cast<std::size_t>(row_of[static_cast<std::size_t>(corners[static_cast<std::size_t>(k + 2)])]);
    if (i != j) {
      full[i][j] -= eta;
      full[j][i] -= eta;
      full[i][i] += eta;
      full[j][j] += eta;
    }
    if (coloring.type[static_cast<std::size_t>(c)] == CrossingType::II) g.correction += eta;
  }
  const std::size_t dim = w == 0 ? 0 : w - 1;
  g.matrix.assign(dim, std::vector<std::int64_t>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g.matrix[i][j] = full[i][j];
  }
  g.white_faces.assign(whites.begin(), whites.begin() + static_cast<std::ptrdiff_t>(dim));
  return g;
}

int matrix_signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw NonSymmetricInput("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw NonSymmetricInput("matrix is not symmetric");
    }
  }
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  int signature = 0;
  auto drop = [&live](std::size_t idx) { live.erase(live.begin() + static_cast<std::ptrdiff_t>(idx)); };

  while (!live.empty()) {
    // 1x1 pivot on a nonzero diagonal entry.
    std::size_t pivot = live.size();
    for (std::size_t t = 0; t < live.size(); ++t) {
      if (sgn(a[live[t]][live[t]]) != 0) {
        pivot = t;
        break;
      }
    }
    if (pivot < live.size()) {
      const std::size_t p = live[pivot];
      const mpq_class d = a[p][p];
      signature += sgn(d);
      drop(pivot);
      for (const std::size_t r : live) {
        if (sgn(a[r][p]) == 0) continue;
        const mpq_class f = a[r][p] / d;
        for (const std::size_t c : live) a[r][c] -= f * a[p][c];
      }
      continue;
    }
    // All diagonal entries vanish: a nonzero off-diagonal b spans a hyperbolic
    // plane [[0,b],[b,0]] contributing one positive and one negative square.
    std::size_t ti = live.size(), tj = live.size();
    for (std::size_t s = 0; s < live.size() && ti == live.size(); ++s) {
      for (std::size_t t = s + 1; t < live.size(); ++t) {
        if (sgn(a[live[s]][live[t]]) != 0) {
          ti = s;
          tj = t;
          break;
        }
      }
    }
    if (ti == live.size()) break;  // remaining block is zero
    const std::size_t p = live[ti];
    const std::size_t q = live[tj];
    const mpq_class b = a[p][q];
    drop(tj);
    drop(ti);
    // Schur complement with inverse [[0,1/b],[1/b,0]].
    std::vector<mpq_class> rp, rq;
    for (const std::size_t r : live) {
      rp.push_back(a[r][p]);
      rq.push_back(a[r][q]);
    }
    for (std::size_t s = 0; s < live.size(); ++s) {
      for (std::size_t t = 0; t < live.size(); ++t) {
        a[live[s]][live[t]] -= (rp[s] * rq[t] + rq[s] * rp[t]) / b;
      }
    }
  }
  return signature;
}

std::int64_t matrix_abs_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw NonSymmetricInput("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  mpz_class prev = 1;
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  mpz_class det = abs(a[n - 1][n - 1]);
  if (!det.fits_slong_p()) throw std::overflow_error("determinant exceeds 64 bits");
  (void)swaps;
  return det.get_si();
}

SignatureReport knot_signature(const Diagram& d) {
  SignatureReport report;
  const auto colorings = checkerboard(d);
  for (std::size_t k = 0; k < 2; ++k) {
    const GoeritzForm g = goeritz_matrix(d, colorings[k]);
    ColoringBreakdown& b = report.colorings[k];
    b.form_signature = matrix_signature(g.matrix);
    b.correction = g.correction;
    b.dimension = static_cast<int>(g.matrix.size());
    b.determinant = matrix_abs_determinant(g.matrix);
  }
  const auto& [a, b] = report.colorings;
  const int sa = a.form_signature - a.correction;
  const int sb = b.form_signature - b.correction;
  if (sa != sb || a.determinant != b.determinant) {
    throw ColoringDisagreement("shadings disagree: sigma " + std::to_string(sa) + " vs " + std::to_string(sb) +
                               ", det " + std::to_string(a.determinant) + " vs " + std::to_string(b.determinant));
  }
  report.sigma = sa;
  report.determinant = a.determinant;
  return report;
}

int euler_from_signatures(int sigma_knot, int sigma_cover) { return 2 * (sigma_knot - sigma_cover); }

Rational sigma_from_euler(int sigma_knot, int euler) { return Rational(sigma_knot) - Rational(euler, 2); }

}  // namespace pinchband
