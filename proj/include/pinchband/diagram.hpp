#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinchband {

/// Which side of an oriented edge. "left" is the left-hand side when walking
/// along the edge in the direction of the knot orientation.
enum class Side : std::uint8_t { left = 0, right = 1 };

constexpr Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }
std::string_view to_string(Side s);
Side side_from_string(std::string_view text);

/// One crossing of a planar diagram code: the four incident edge labels in
/// counterclockwise order. Slots 0 and 2 always carry the under strand; in a
/// conventional code slot 0 is the incoming under edge.
struct Crossing {
  std::array<int, 4> slots{};

  int operator[](int i) const { return slots[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SlotRef {
  int crossing = 0;
  int slot = 0;
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

/// A validated single-component planar knot diagram.
///
/// Construction checks that the labels are exactly 1..2n with each used twice,
/// that the strands close up into one component, and that the face count
/// satisfies V - E + F = 2. The empty crossing list is the round unknot.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Crossing> crossings, std::string label = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_[static_cast<std::size_t>(i)]; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  /// Edges available for attaching things; the round unknot has one virtual edge.
  int attachable_edges() const { return crossings_.empty() ? 1 : edge_count(); }

  const std::string& label() const { return label_; }
  Diagram relabeled(std::string label) const;

  /// Crossing-by-crossing identity; the display label does not participate.
  friend bool operator==(const Diagram& a, const Diagram& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::string label_;
};

struct EdgeEnds {
  SlotRef tail;  // where the edge leaves a crossing
  SlotRef head;  // where the edge enters a crossing
};

/// A diagram together with the orientation obtained by traversing from the
/// lowest edge label, plus the crossing signs that orientation induces.
struct OrientedDiagram {
  Diagram diagram;
  std::vector<EdgeEnds> edges;        // indexed by label - 1
  std::vector<int> under_in;          // entry slot (0 or 2) of the under strand
  std::vector<int> over_in;           // entry slot (1 or 3) of the over strand
  std::vector<int> signs;             // +1 / -1 per crossing
  std::vector<int> traversal;         // edge labels in traversal order
  int writhe = 0;

  const EdgeEnds& ends(int label) const { return edges[static_cast<std::size_t>(label - 1)]; }
  bool is_tail(SlotRef s) const;
};

struct EdgeSide {
  int edge = 0;
  Side side = Side::left;
  friend auto operator<=>(const EdgeSide&, const EdgeSide&) = default;
};

/// A face of the diagram: a cyclic sequence of crossing corners, and the edge
/// sides that bound it in the same order. Corner k of a crossing is the sector
/// between slots k and k+1.
struct Face {
  std::vector<SlotRef> corners;
  std::vector<EdgeSide> boundary;
};

struct FaceStructure {
  std::vector<Face> faces;
  std::vector<std::array<int, 2>> edge_faces;    // [label-1][side] -> face index
  std::vector<std::array<int, 4>> corner_faces;  // [crossing][corner] -> face index

  int face_of(EdgeSide s) const {
    return edge_faces[static_cast<std::size_t>(s.edge - 1)][static_cast<std::size_t>(s.side)];
  }
};

// -- codecs ----------------------------------------------------------------

/// Grammar: `PD[` [ `X(` int `,` int `,` int `,` int `)` { `,` X(...) } ] `]`,
/// positive decimal labels, ASCII whitespace allowed between tokens.
Diagram parse_pd(std::string_view text);
std::string emit_pd(const Diagram& d);

// -- orientation and signs ---------------------------------------------------

OrientedDiagram orient(const Diagram& d);
int writhe(const OrientedDiagram& od);
int writhe(const Diagram& d);

/// Relabels edges 1..2n along the orientation and rotates every crossing so
/// slot 0 is the incoming under edge. `label_map[old-1]` gives the new label.
struct Normalized {
  Diagram diagram;
  std::vector<int> label_map;
};
Normalized normalize_with_map(const Diagram& d);
Diagram normalize(const Diagram& d);

/// Crossing change at every crossing.
Diagram mirror(const Diagram& d);

// -- faces -----------------------------------------------------------------

FaceStructure face_structure(const OrientedDiagram& od);
std::vector<Face> faces(const Diagram& d);

// -- generators --------------------------------------------------------------

/// Closure of a braid word; generator +i / -i is sigma_i^{+1} / sigma_i^{-1}.
/// Positive generators give positive crossings.
Diagram braid_closure(int strands, std::span<const int> word, std::string label = {});

/// Closed positive 2-braid with n crossings (the torus knot T(2,n)).
Diagram torus_2n_diagram(int n);

/// Builtin corpus: unknot, 3_1, 4_1, 5_1, 5_2, 6_1, 6_2, 6_3, 7_1, 9_1,
/// 11a367, the T(2,n) names for odd n, and "m"-prefixed mirrors.
Diagram table_diagram(std::string_view name);
std::vector<std::string> table_names();
/// Alternative name of a table entry ("3_1" for "T(2,3)"); empty if none.
std::string table_alias(std::string_view name);

/// Reidemeister I: inserts a kink of the given sign on `edge`, with the loop
/// lying on `side` of the edge.
Diagram insert_curl(const Diagram& d, int edge, int sign, Side side);

}  // namespace pinchband
