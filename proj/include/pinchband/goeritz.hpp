#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pinchband/diagram.hpp"
#include "pinchband/rational.hpp"

namespace pinchband {

enum class Shade : std::uint8_t { white = 0, black = 1 };
enum class CrossingType : std::uint8_t { I = 1, II = 2 };

/// Checkerboard shading of the faces of a diagram. Black faces span the
/// checkerboard surface; the Goeritz form lives on the white ones.
struct Coloring {
  std::vector<Shade> shade;           // per face, in face_structure order
  std::vector<int> incidence;         // eta(c) = +1 / -1 per crossing
  std::vector<CrossingType> type;     // relative to the knot orientation
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct GoeritzForm {
  IntMatrix matrix;                   // (#white faces - 1) square, symmetric
  int correction = 0;                 // mu: sum of eta over type II crossings
  std::vector<int> white_faces;       // faces indexing the rows, last white face dropped
  Coloring coloring;
};

struct ColoringBreakdown {
  int form_signature = 0;             // sig(G)
  int correction = 0;                 // mu
  int dimension = 0;
  std::int64_t determinant = 0;       // |det G|
};

struct SignatureReport {
  int sigma = 0;
  std::int64_t determinant = 1;
  std::array<ColoringBreakdown, 2> colorings{};
};

/// The two proper shadings. In the first one the face on the left of edge 1 is
/// white; the second is its complement.
std::array<Coloring, 2> checkerboard(const Diagram& d);

GoeritzForm goeritz_matrix(const Diagram& d, const Coloring& coloring);

/// Signature p - q of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals.
int matrix_signature(const IntMatrix& m);

/// |det| by fraction-free elimination. The 0x0 matrix has determinant 1.
std::int64_t matrix_abs_determinant(const IntMatrix& m);

/// sigma(K) = sig(G) - mu, evaluated for both shadings, which must agree.
/// Positive knots get negative signature: sigma(T(2,5)) = -4.
SignatureReport knot_signature(const Diagram& d);

/// Normal Euler number of a surface F with boundary K from sigma(K) and the
/// signature of the double branched cover: e = 2 (sigma(K) - sigma(cover)).
int euler_from_signatures(int sigma_knot, int sigma_cover);

/// sigma(cover) = sigma(K) - e/2; not an integer for an impossible pairing.
Rational sigma_from_euler(int sigma_knot, int euler);

}  // namespace pinchband
