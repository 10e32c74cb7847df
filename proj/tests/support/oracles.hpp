#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pinchband/diagram.hpp"
#include "pinchband/goeritz.hpp"

namespace oracle {

/// Coefficients c[0..n] of det(xI - M), c[n] = 1, by Faddeev-LeVerrier in
/// exact integer arithmetic.
std::vector<mpz_class> charpoly(const pinchband::IntMatrix& m);

/// p - q for a symmetric matrix from Descartes' rule of signs, which is exact
/// on the real-rooted characteristic polynomial.
int descartes_signature(const pinchband::IntMatrix& m);

/// |<D>| at A = exp(i pi / 4) by a state sum written independently of the
/// library; equals det(K). Returns -1 if the value is not a unit times an
/// integer, which would signal a malformed diagram.
std::int64_t determinant_at_zeta8(const pinchband::Diagram& d);

/// V + V^T for the Seifert matrix of the closed positive 2-braid with n
/// crossings: -2 on the diagonal, 1 beside it.
pinchband::IntMatrix torus_symmetrized_seifert(int n);

}  // namespace oracle
