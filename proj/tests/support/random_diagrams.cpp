#include "random_diagrams.hpp"

#include "pinchband/errors.hpp"

namespace testgen {

using pinchband::Diagram;

Diagram random_knot(std::mt19937& rng, int max_crossings) {
  std::uniform_int_distribution<int> strands_dist(2, 4);
  for (;;) {
    const int strands = strands_dist(rng);
    if (strands - 1 > max_crossings) continue;
    std::uniform_int_distribution<int> len_dist(strands - 1, max_crossings);
    std::uniform_int_distribution<int> gen_dist(1, strands - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<int> word(static_cast<std::size_t>(len_dist(rng)));
    for (int& g : word) g = gen_dist(rng) * (coin(rng) ? 1 : -1);
    Diagram d;
    try {
      d = pinchband::braid_closure(strands, word);
    } catch (const pinchband::Error&) {
      continue;  // more than one component
    }
    std::uniform_int_distribution<int> kinks_dist(0, 2);
    for (int k = kinks_dist(rng); k > 0 && d.crossing_count() < max_crossings; --k) {
      std::uniform_int_distribution<int> edge_dist(1, d.attachable_edges());
      d = pinchband::insert_curl(d, edge_dist(rng), coin(rng) ? 1 : -1,
                                 coin(rng) ? pinchband::Side::left : pinchband::Side::right);
    }
    return d;
  }
}

pinchband::IntMatrix random_symmetric(std::mt19937& rng, int dim, int lo, int hi) {
  std::uniform_int_distribution<std::int64_t> entry(lo, hi);
  pinchband::IntMatrix m(static_cast<std::size_t>(dim), std::vector<std::int64_t>(static_cast<std::size_t>(dim)));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) m[i][j] = m[j][i] = entry(rng);
  }
  return m;
}

}  // namespace testgen
