#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinchband/diagram.hpp"

namespace pinchband {

/// Integer Laurent polynomial in one variable A. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t coeff, int exponent);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "-A^-3 + A^5"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void add_term(int exponent, std::int64_t coeff);
  std::map<int, std::int64_t> terms_;
};

inline constexpr int kMaxBracketCrossings = 16;

/// Kauffman bracket by state sum. Positive crossings take weight A on the
/// smoothing joining slots (0,1) and (2,3); the loop value is -A^2 - A^-2.
/// The crossingless unknot has bracket 1. Throws TooManyCrossings above 16.
LaurentPoly kauffman_bracket(const Diagram& d);

/// (-A^3)^(-w) <D>, invariant under all Reidemeister moves.
LaurentPoly normalized_bracket(const Diagram& d);

struct KnotFingerprint {
  std::int64_t determinant = 1;
  int signature = 0;
  LaurentPoly bracket;  // writhe-normalized
  friend bool operator==(const KnotFingerprint&, const KnotFingerprint&) = default;
};

KnotFingerprint fingerprint(const Diagram& d);

/// Greedy R1/R2 reduction: removes kinks, then bigons, until neither remains.
/// The crossing count strictly decreases with each move.
Diagram simplify(const Diagram& d);

struct KnotId {
  std::string name;
  bool slice = false;
  KnotFingerprint fingerprint;
};

/// Builtin identification table: every corpus knot and the mirror of every
/// chiral one. Fingerprints are computed once from the builtin diagrams.
const std::vector<KnotId>& knot_table();

/// Table entry by name or alias; throws UnknownName.
const KnotId& knot_by_name(std::string_view name);

struct Identification {
  enum class Kind { known, ambiguous, unknown };
  Kind kind = Kind::unknown;
  std::optional<KnotId> knot;           // set iff known
  std::vector<std::string> candidates;  // all table names sharing the fingerprint
  Diagram simplified;
  std::string reason;                   // why unknown, if it is
};

Identification identify(const Diagram& d);

/// The identified table entry; throws UnknownKnot for ambiguous or unknown.
KnotId identify_known(const Diagram& d);

}  // namespace pinchband
