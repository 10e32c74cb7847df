#include <doctest.h>

#include <random>

#include "pinchband/diagram.hpp"
#include "pinchband/errors.hpp"
#include "pinchband/identify.hpp"
#include "random_diagrams.hpp"

using namespace pinchband;

namespace {

/// Same knot traversed the other way: every tuple rotated by two so the other
/// under edge is incoming, labels renumbered along the reversed traversal.
Diagram reversed_orientation(const Diagram& d) {
  const int e = d.edge_count();
  auto relabel = [e](int l) { return l == 1 ? 1 : e + 2 - l; };
  std::vector<Crossing> xs;
  for (const Crossing& x : d.crossings()) {
    xs.push_back({{relabel(x[2]), relabel(x[3]), relabel(x[0]), relabel(x[1])}});
  }
  return Diagram(xs);
}

std::vector<Diagram> corpus() {
  std::vector<Diagram> out;
  for (const std::string& name : table_names()) {
    out.push_back(table_diagram(name));
    out.push_back(table_diagram("m" + name));
  }
  return out;
}

}  // namespace

TEST_CASE("parse_pd accepts the grammar and rejects violations") {
  CHECK(parse_pd("PD[]").crossing_count() == 0);
  CHECK(parse_pd("  PD[ X(1, 1, 2, 2) ]\n").crossing_count() == 1);
  CHECK_THROWS_AS(parse_pd("PD[X(1,3,2,2)]"), EdgeLabelError);
  CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("PD[X(1,2,2,1),]"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("PD[X(0,0,1,1)]"), SyntaxError);
  // Two round circles clasped: a link, not a knot.
  CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,3),X(3,2,4,1)]"), MultiComponentError);
}

TEST_CASE("emit_pd round-trips the corpus and random diagrams") {
  CHECK(emit_pd(Diagram{}) == "PD[]");
  const Diagram t3 = torus_2n_diagram(3);
  CHECK(parse_pd(emit_pd(t3)) == t3);
  for (const Diagram& d : corpus()) CHECK(parse_pd(emit_pd(d)) == d);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Diagram d = testgen::random_knot(rng, 10);
    REQUIRE(parse_pd(emit_pd(d)) == d);
  }
}

TEST_CASE("writhe of standard diagrams") {
  CHECK(writhe(Diagram{}) == 0);
  CHECK(writhe(torus_2n_diagram(5)) == 5);
  CHECK(writhe(torus_2n_diagram(9)) == 9);
  CHECK(writhe(mirror(torus_2n_diagram(5))) == -5);
  CHECK(writhe(mirror(torus_2n_diagram(3))) == -3);
  CHECK(writhe(table_diagram("4_1")) == 0);
  CHECK(writhe(parse_pd("PD[X(1,1,2,2)]")) == 1);
  CHECK(writhe(parse_pd("PD[X(2,1,1,2)]")) == -1);
}

TEST_CASE("writhe is invariant under orientation reversal and negated by mirror") {
  std::mt19937 rng(12);
  std::vector<Diagram> ds = corpus();
  for (int i = 0; i < 100; ++i) ds.push_back(testgen::random_knot(rng, 10));
  for (const Diagram& d : ds) {
    CHECK(writhe(mirror(d)) == -writhe(d));
    CHECK(mirror(mirror(d)) == d);
    if (d.crossing_count() > 0) CHECK(writhe(reversed_orientation(d)) == writhe(d));
  }
  CHECK(mirror(Diagram{}) == Diagram{});
}

TEST_CASE("orientation follows the labels and signs sum to the writhe") {
  const OrientedDiagram od = orient(table_diagram("6_1"));
  int sum = 0;
  for (const int s : od.signs) {
    CHECK((s == 1 || s == -1));
    sum += s;
  }
  CHECK(sum == od.writhe);
  CHECK(od.traversal.front() == 1);
  CHECK(od.traversal.size() == 12);
}

TEST_CASE("face count obeys the Euler formula") {
  CHECK(faces(Diagram{}).size() == 2);
  CHECK(faces(torus_2n_diagram(3)).size() == 5);
  for (int n = 1; n <= 11; n += 2) CHECK(faces(torus_2n_diagram(n)).size() == static_cast<std::size_t>(n + 2));
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = testgen::random_knot(rng, 10);
    const std::vector<Face> fs = faces(d);
    REQUIRE(fs.size() == static_cast<std::size_t>(d.crossing_count() + 2));
    std::size_t sides = 0;
    for (const Face& f : fs) sides += f.boundary.size();
    CHECK(sides == static_cast<std::size_t>(2 * d.edge_count()));  // each edge side lies on one face
  }
}

TEST_CASE("torus_2n_diagram") {
  CHECK(torus_2n_diagram(1).crossing_count() == 1);
  CHECK(identify_known(torus_2n_diagram(1)).name == "unknot");
  CHECK(torus_2n_diagram(5).crossing_count() == 5);
  CHECK(identify_known(torus_2n_diagram(5)).name == "T(2,5)");
  CHECK_THROWS_AS(torus_2n_diagram(4), EvenParameter);
}

TEST_CASE("table_diagram names and aliases") {
  CHECK(table_diagram("unknot") == Diagram{});
  CHECK(emit_pd(table_diagram("unknot")) == "PD[]");
  CHECK(table_diagram("6_1").crossing_count() == 6);
  for (const char* name : {"unknot", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "9_1", "11a367"}) {
    CHECK_NOTHROW(table_diagram(name));
  }
  CHECK(table_diagram("5_1") == table_diagram("T(2,5)"));
  CHECK(fingerprint(table_diagram("5_1")) == fingerprint(torus_2n_diagram(5)));
  CHECK(table_diagram("m6_1") == mirror(table_diagram("6_1")));
  CHECK(table_alias("T(2,11)") == "11a367");
  CHECK_THROWS_AS(table_diagram("8_19"), UnknownName);
}

TEST_CASE("insert_curl adds one crossing of the requested sign") {
  const Diagram t = torus_2n_diagram(3);
  for (const int sign : {1, -1}) {
    for (const Side side : {Side::left, Side::right}) {
      const Diagram c = insert_curl(t, 2, sign, side);
      CHECK(c.crossing_count() == 4);
      CHECK(writhe(c) == 3 + sign);
    }
  }
  CHECK(writhe(insert_curl(Diagram{}, 1, -1, Side::left)) == -1);
}

TEST_CASE("braid closures") {
  const std::vector<int> figure_eight{1, -2, 1, -2};
  const Diagram d = braid_closure(3, figure_eight);
  CHECK(d.crossing_count() == 4);
  CHECK(writhe(d) == 0);
  const std::vector<int> two_component{1, 1};
  CHECK_THROWS_AS(braid_closure(2, two_component), MultiComponentError);
}

TEST_CASE("normalize relabels along the orientation") {
  std::mt19937 rng(14);
  for (int i = 0; i < 50; ++i) {
    const Diagram d = testgen::random_knot(rng, 8);
    const Diagram n = normalize(d);
    CHECK(writhe(n) == writhe(d));
    CHECK(normalize(n) == n);
    const OrientedDiagram od = orient(n);
    for (int k = 0; k < n.crossing_count(); ++k) CHECK(od.under_in[static_cast<std::size_t>(k)] == 0);
  }
}
