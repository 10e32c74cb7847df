#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pinchband/diagram.hpp"

namespace pinchband {

/// End of a strand piece. Every piece has a direction of its own; end 0 is
/// where it starts and end 1 where it finishes.
struct PieceEnd {
  int piece = 0;
  int end = 0;
};

/// Assembles a planar diagram code out of strand pieces. Pieces are glued
/// end-to-end with `join` (no crossing in between) or terminate at a crossing
/// slot. Every maximal chain of joined pieces becomes one edge label.
class StrandBuilder {
 public:
  int add_piece();
  void join(PieceEnd a, PieceEnd b);
  /// Slots in counterclockwise order; slots 0 and 2 carry the under strand.
  int add_crossing(const std::array<PieceEnd, 4>& slots);

  struct Built {
    std::vector<Crossing> crossings;
    std::vector<int> piece_label;  // 0 for pieces on crossingless loops
    int free_loops = 0;
    int components = 0;            // closed curves, including free loops
  };
  Built build() const;

  /// Walks from `piece` towards its end `toward` and onward through joins
  /// until reaching a crossing slot. Empty on a crossingless loop.
  std::optional<SlotRef> walk_to_slot(int piece, int toward) const;

  int piece_count() const { return static_cast<int>(partner_.size()); }

 private:
  struct EndLink {
    std::optional<PieceEnd> joined;
    std::optional<SlotRef> slot;
  };
  std::vector<std::array<EndLink, 2>> partner_;
  std::vector<std::array<PieceEnd, 4>> crossings_;
};

/// Loads a diagram into a builder. Edges listed in `split` are cut into
/// `pieces` consecutive pieces along the orientation; every other edge is one
/// piece. The caller glues the interior cut ends.
struct LoadedDiagram {
  StrandBuilder builder;
  std::vector<std::vector<int>> edge_pieces;  // [label-1] -> pieces tail..head
};
LoadedDiagram load_into_builder(const OrientedDiagram& od, const std::vector<std::pair<int, int>>& split);

/// Number of closed curves traced by a crossing list (labels must pair up).
int count_components(const std::vector<Crossing>& crossings);

}  // namespace pinchband
