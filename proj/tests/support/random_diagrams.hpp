#pragma once

#include <random>
#include <vector>

#include "pinchband/diagram.hpp"
#include "pinchband/goeritz.hpp"

namespace testgen {

/// Knot diagram with at most `max_crossings` crossings: the closure of a
/// random braid on 2 to 4 strands, rejected until it has one component, then
/// decorated with random kinks while the budget allows.
pinchband::Diagram random_knot(std::mt19937& rng, int max_crossings);

/// Symmetric matrix of the given dimension with entries in [lo, hi].
pinchband::IntMatrix random_symmetric(std::mt19937& rng, int dim, int lo, int hi);

}  // namespace testgen
