#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pinchband/diagram.hpp"
#include "pinchband/identify.hpp"
#include "pinchband/rational.hpp"

namespace pinchband {

/// A point on an edge where a band end is attached, and the side of the edge
/// the band leaves from. `order` ranks the two points when both sit on the
/// same edge (0 comes first along the orientation); otherwise it is 0.
struct Attachment {
  int edge = 1;
  Side side = Side::left;
  int order = 0;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

enum class Level : std::uint8_t { over = 0, under = 1 };
std::string_view to_string(Level l);
Level level_from_string(std::string_view text);

/// One transversal passage of the band core across an edge of the diagram.
struct RouteStep {
  int edge = 1;
  Level level = Level::over;
  friend bool operator==(const RouteStep&, const RouteStep&) = default;
};

/// Parameters of one H(2)-move. The band is flat in the diagram plane. It
/// leaves attachment 0 into the face on its side, crosses the routing edges in
/// order and arrives at attachment 1 from the face on that side. A clasp sign
/// of -1 reads the routing from attachment 1 instead, so (a, b, -1, w) and
/// (b, a, +1, reverse(w)) denote the same move.
struct H2MoveSite {
  std::array<Attachment, 2> attach{};
  std::vector<RouteStep> routing;
  int clasp_sign = 1;
  friend bool operator==(const H2MoveSite&, const H2MoveSite&) = default;
};

/// Performs the move and returns the normalized result. Throws InvalidSite
/// for malformed sites or routings that do not form a simple face path from
/// attachment 0 to attachment 1, and NonKnotResult when the surgered curve
/// has more than one component.
Diagram apply_h2(const Diagram& d, const H2MoveSite& site);

/// The dual move on apply_h2(d, site): a short band across the middle of the
/// original one. Applying it undoes the move up to R2 moves, keeping writhe.
H2MoveSite reverse_site(const Diagram& d, const H2MoveSite& site);

/// Pushes a finger of the edge at `from` along `routing` (R2 moves only; the
/// knot type is unchanged). The routing follows the same face-path rules as a
/// band routing but has no far end.
Diagram insert_finger(const Diagram& d, Attachment from, const std::vector<RouteStep>& routing);

/// (sigma2 - sigma1) + (w2 - w1) / 2.
Rational cobordism_sigma(int sigma1, int sigma2, int w1, int w2);

struct PinchCertificate {
  Diagram pd_before;
  Diagram pd_after;
  H2MoveSite site;
  std::string knot_before;
  std::string knot_after;
  int writhe_before = 0;
  int writhe_after = 0;
  int sigma_before = 0;
  int sigma_after = 0;
  int sigma_cover_cobordism = 0;
  int b2_cover = 1;
  int b1_cobordism = 1;
  bool extended_model = false;  // nonempty routing
  friend bool operator==(const PinchCertificate&, const PinchCertificate&) = default;
};

/// Throws UnknownKnot if either end fails to identify and NonIntegralSigma if
/// the writhe and signature differences have mismatched parity.
PinchCertificate make_certificate(const Diagram& d, const H2MoveSite& site);

struct CheckResult {
  std::string field;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

VerificationReport verify_certificate(const PinchCertificate& cert);

// -- surface ledgers ---------------------------------------------------------

struct SurfaceLedger {
  std::string boundary;
  int betti1 = 0;
  int sigma_cover = 0;
  std::optional<int> euler;  // empty when the boundary is not a table knot
  std::vector<std::string> history;
  bool orientable = true;

  /// The double branched cover has b2 = betti1; negative definite iff
  /// sigma_cover = -betti1.
  bool negative_definite() const { return betti1 > 0 && sigma_cover == -betti1; }
};

/// A cobordism step as far as the ledger is concerned.
struct CobordismStep {
  std::string knot_before;
  std::string knot_after;
  int sigma_after = 0;
  int sigma_cover = 0;
  std::string note;
};

/// Disk bounded by a slice table knot; throws NotKnownSlice otherwise.
SurfaceLedger base_ledger(const KnotId& k);
/// Minimal genus Seifert surface of T(2,n), pushed into the ball.
SurfaceLedger seifert_ledger(int n);
/// Standard Moebius band bounded by the unknot with e = 2 * sign.
SurfaceLedger mobius_summand(int sign);

/// Glues a non-orientable cobordism onto the boundary of the ledger's surface.
/// Throws BoundaryMismatch.
SurfaceLedger glue_step(const SurfaceLedger& ledger, const CobordismStep& step);
SurfaceLedger glue_pinch(const SurfaceLedger& ledger, const PinchCertificate& cert);

/// Boundary connected sum with a surface bounded by the unknot. Throws
/// BoundaryMismatch if the second boundary is not the unknot.
SurfaceLedger boundary_connect_sum(const SurfaceLedger& a, const SurfaceLedger& b);

/// e = 2 (sigma(boundary) - sigma_cover) when the boundary is a table knot.
bool gl_consistent(const SurfaceLedger& ledger);

}  // namespace pinchband
