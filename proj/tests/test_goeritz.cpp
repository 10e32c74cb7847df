#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pinchband/diagram.hpp"
#include "pinchband/errors.hpp"
#include "pinchband/goeritz.hpp"
#include "pinchband/identify.hpp"
#include "random_diagrams.hpp"

using namespace pinchband;

namespace {

std::vector<Diagram> corpus() {
  std::vector<Diagram> out;
  for (const std::string& name : table_names()) {
    out.push_back(table_diagram(name));
    out.push_back(table_diagram("m" + name));
  }
  return out;
}

/// Every edge separates a black face from a white one.
bool proper(const Diagram& d, const Coloring& c) {
  const FaceStructure fs = face_structure(orient(d));
  for (int e = 1; e <= d.edge_count(); ++e) {
    const int l = fs.face_of({e, Side::left});
    const int r = fs.face_of({e, Side::right});
    if (c.shade[static_cast<std::size_t>(l)] == c.shade[static_cast<std::size_t>(r)]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("checkerboard colorings are proper and complementary") {
  const auto unknot = checkerboard(Diagram{});
  REQUIRE(unknot[0].shade.size() == 2);
  CHECK(unknot[0].shade[0] != unknot[0].shade[1]);

  const auto t3 = checkerboard(torus_2n_diagram(3));
  int black = 0;
  for (const Shade s : t3[0].shade) black += s == Shade::black;
  CHECK(((black == 2) || (black == 3)));

  std::mt19937 rng(21);
  std::vector<Diagram> ds = corpus();
  for (int i = 0; i < 100; ++i) ds.push_back(testgen::random_knot(rng, 10));
  for (const Diagram& d : ds) {
    const auto cs = checkerboard(d);
    CHECK(proper(d, cs[0]));
    CHECK(proper(d, cs[1]));
    for (std::size_t f = 0; f < cs[0].shade.size(); ++f) CHECK(cs[0].shade[f] != cs[1].shade[f]);
    if (d.crossing_count() > 0) {
      // The face left of edge 1 is white in the first shading.
      const FaceStructure fs = face_structure(orient(d));
      CHECK(cs[0].shade[static_cast<std::size_t>(fs.face_of({1, Side::left}))] == Shade::white);
    }
  }
}

TEST_CASE("Goeritz matrices") {
  const GoeritzForm empty = goeritz_matrix(Diagram{}, checkerboard(Diagram{})[0]);
  CHECK(empty.matrix.empty());
  CHECK(empty.correction == 0);
  CHECK(matrix_abs_determinant(empty.matrix) == 1);

  const Diagram t3 = torus_2n_diagram(3);
  for (const Coloring& c : checkerboard(t3)) {
    const GoeritzForm g = goeritz_matrix(t3, c);
    CHECK((g.matrix.size() == 1 || g.matrix.size() == 2));
    CHECK(matrix_abs_determinant(g.matrix) == 3);
  }
  const Diagram fig8 = table_diagram("4_1");
  for (const Coloring& c : checkerboard(fig8)) CHECK(matrix_abs_determinant(goeritz_matrix(fig8, c).matrix) == 5);

  std::mt19937 rng(22);
  for (int i = 0; i < 50; ++i) {
    const Diagram d = testgen::random_knot(rng, 10);
    for (const Coloring& c : checkerboard(d)) {
      const GoeritzForm g = goeritz_matrix(d, c);
      for (std::size_t r = 0; r < g.matrix.size(); ++r) {
        for (std::size_t s = 0; s < g.matrix.size(); ++s) CHECK(g.matrix[r][s] == g.matrix[s][r]);
      }
      const std::int64_t det = matrix_abs_determinant(g.matrix);
      CHECK(det == oracle::determinant_at_zeta8(d));
      // Nondegenerate form: signature and dimension share parity.
      CHECK((matrix_signature(g.matrix) - static_cast<int>(g.matrix.size())) % 2 == 0);
    }
  }
}

TEST_CASE("matrix_signature examples") {
  CHECK(matrix_signature({{2}}) == 1);
  CHECK(matrix_signature({{1, 0}, {0, -1}}) == 0);
  CHECK(matrix_signature({{0, 1}, {1, 0}}) == 0);
  CHECK(matrix_signature({}) == 0);
  CHECK(matrix_signature({{0, 0}, {0, 0}}) == 0);
  CHECK(matrix_signature({{0, 1, 0}, {1, 0, 0}, {0, 0, -3}}) == -1);
  CHECK_THROWS_AS(matrix_signature({{1, 2}, {3, 1}}), NonSymmetricInput);
}

TEST_CASE("matrix_signature agrees with the Descartes oracle") {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    const int dim = 1 + static_cast<int>(rng() % 8);
    const IntMatrix m = testgen::random_symmetric(rng, dim, -5, 5);
    REQUIRE(matrix_signature(m) == oracle::descartes_signature(m));
  }
  // Sparse matrices exercise zero pivots and zero eigenvalues.
  for (int i = 0; i < 200; ++i) {
    const int dim = 1 + static_cast<int>(rng() % 8);
    IntMatrix m = testgen::random_symmetric(rng, dim, -1, 1);
    for (std::size_t k = 0; k < m.size(); ++k) m[k][k] = 0;
    REQUIRE(matrix_signature(m) == oracle::descartes_signature(m));
  }
}

TEST_CASE("matrix_abs_determinant matches the characteristic polynomial") {
  std::mt19937 rng(24);
  for (int i = 0; i < 200; ++i) {
    const int dim = 1 + static_cast<int>(rng() % 6);
    const IntMatrix m = testgen::random_symmetric(rng, dim, -5, 5);
    mpz_class c0 = oracle::charpoly(m)[0];
    CHECK(mpz_class(static_cast<long>(matrix_abs_determinant(m))) == abs(c0));
  }
}

TEST_CASE("knot signatures") {
  CHECK(knot_signature(torus_2n_diagram(5)).sigma == -4);
  CHECK(knot_signature(torus_2n_diagram(9)).sigma == -8);
  const SignatureReport s61 = knot_signature(table_diagram("6_1"));
  CHECK(s61.sigma == 0);
  CHECK(s61.determinant == 9);
  const SignatureReport u = knot_signature(Diagram{});
  CHECK(u.sigma == 0);
  CHECK(u.determinant == 1);
  for (int n = 1; n <= 11; n += 2) {
    CHECK(knot_signature(torus_2n_diagram(n)).determinant == n);
    if (n >= 3) {
      CHECK(knot_signature(torus_2n_diagram(n)).sigma ==
            oracle::descartes_signature(oracle::torus_symmetrized_seifert(n)));
    }
  }
}

TEST_CASE("signature is coloring independent, mirror odd, and Reidemeister invariant") {
  std::mt19937 rng(25);
  std::vector<Diagram> ds = corpus();
  for (int i = 0; i < 200; ++i) ds.push_back(testgen::random_knot(rng, 10));
  for (const Diagram& d : ds) {
    const SignatureReport r = knot_signature(d);
    CHECK(r.colorings[0].form_signature - r.colorings[0].correction ==
          r.colorings[1].form_signature - r.colorings[1].correction);
    CHECK(r.colorings[0].determinant == r.colorings[1].determinant);
    const SignatureReport m = knot_signature(mirror(d));
    CHECK(m.sigma == -r.sigma);
    CHECK(m.determinant == r.determinant);
    const SignatureReport s = knot_signature(simplify(d));
    CHECK(s.sigma == r.sigma);
    CHECK(s.determinant == r.determinant);
    CHECK(r.sigma % 2 == 0);
  }
}

TEST_CASE("Euler number and cover signature conversions") {
  CHECK(euler_from_signatures(-4, -1) == -6);
  CHECK(euler_from_signatures(-8, -1) == -14);
  CHECK(euler_from_signatures(0, 0) == 0);
  CHECK(euler_from_signatures(-4, 1) == -10);
  CHECK(sigma_from_euler(-4, -6) == Rational(-1));
  CHECK(sigma_from_euler(0, 2) == Rational(-1));
  const Rational r = sigma_from_euler(-4, -5);
  CHECK(r == Rational(-3, 2));
  CHECK_FALSE(r.is_integer());
}
