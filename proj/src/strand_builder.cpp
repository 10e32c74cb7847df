#include "pinchband/strand_builder.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "pinchband/errors.hpp"

namespace pinchband {

int StrandBuilder::add_piece() {
  partner_.push_back({});
  return static_cast<int>(partner_.size()) - 1;
}

void StrandBuilder::join(PieceEnd a, PieceEnd b) {
  auto& la = partner_.at(static_cast<std::size_t>(a.piece))[static_cast<std::size_t>(a.end)];
  auto& lb = partner_.at(static_cast<std::size_t>(b.piece))[static_cast<std::size_t>(b.end)];
  if (la.joined || la.slot || lb.joined || lb.slot) throw std::logic_error("piece end already connected");
  la.joined = b;
  lb.joined = a;
}

int StrandBuilder::add_crossing(const std::array<PieceEnd, 4>& slots) {
  const int index = static_cast<int>(crossings_.size());
  for (int s = 0; s < 4; ++s) {
    const PieceEnd e = slots[static_cast<std::size_t>(s)];
    auto& link = partner_.at(static_cast<std::size_t>(e.piece))[static_cast<std::size_t>(e.end)];
    if (link.joined || link.slot) throw std::logic_error("piece end already connected");
    link.slot = SlotRef{index, s};
  }
  crossings_.push_back(slots);
  return index;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

StrandBuilder::Built StrandBuilder::build() const {
  const int n = piece_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int p = 0; p < n; ++p) {
    for (int e = 0; e < 2; ++e) {
      if (const auto& j = partner_[static_cast<std::size_t>(p)][static_cast<std::size_t>(e)].joined) {
        const int a = find_root(parent, p);
        const int b = find_root(parent, j->piece);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int e = 0; e < 2; ++e) {
      const auto& link = partner_[static_cast<std::size_t>(p)][static_cast<std::size_t>(e)];
      if (!link.joined && !link.slot) throw std::logic_error("dangling piece end");
    }
  }

  Built out;
  std::map<int, int> root_label;
  std::map<int, int> uses;
  out.crossings.reserve(crossings_.size());
  for (const auto& slots : crossings_) {
    Crossing c;
    for (int s = 0; s < 4; ++s) {
      const int root = find_root(parent, slots[static_cast<std::size_t>(s)].piece);
      auto [it, inserted] = root_label.try_emplace(root, static_cast<int>(root_label.size()) + 1);
      c.slots[static_cast<std::size_t>(s)] = it->second;
      ++uses[it->second];
    }
    out.crossings.push_back(c);
  }
  for (const auto& [label, count] : uses) {
    if (count != 2) throw std::logic_error("strand chain does not end at exactly two slots");
  }

  out.piece_label.assign(static_cast<std::size_t>(n), 0);
  std::map<int, int> loose;
  for (int p = 0; p < n; ++p) {
    const int root = find_root(parent, p);
    if (auto it = root_label.find(root); it != root_label.end()) {
      out.piece_label[static_cast<std::size_t>(p)] = it->second;
    } else {
      loose.emplace(root, 0);
    }
  }
  out.free_loops = static_cast<int>(loose.size());
  out.components = count_components(out.crossings) + out.free_loops;
  return out;
}

std::optional<SlotRef> StrandBuilder::walk_to_slot(int piece, int toward) const {
  const int limit = 2 * piece_count() + 2;
  for (int steps = 0; steps < limit; ++steps) {
    const auto& link = partner_.at(static_cast<std::size_t>(piece))[static_cast<std::size_t>(toward)];
    if (link.slot) return link.slot;
    if (!link.joined) return std::nullopt;
    piece = link.joined->piece;
    toward = 1 - link.joined->end;
  }
  return std::nullopt;
}

int count_components(const std::vector<Crossing>& crossings) {
  const int labels = 2 * static_cast<int>(crossings.size());
  std::vector<std::vector<SlotRef>> at(static_cast<std::size_t>(labels));
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int l = crossings[static_cast<std::size_t>(c)][s];
      if (l < 1 || l > labels) throw EdgeLabelError("edge label " + std::to_string(l) + " out of range");
      at[static_cast<std::size_t>(l - 1)].push_back({c, s});
    }
  }
  for (int l = 0; l < labels; ++l) {
    if (at[static_cast<std::size_t>(l)].size() != 2) {
      throw EdgeLabelError("edge label " + std::to_string(l + 1) + " is not used exactly twice");
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(labels), 0);
  int components = 0;
  for (int start = 0; start < labels; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++components;
    // Enter a crossing along `start`, leave through the opposite slot, repeat.
    SlotRef entry = at[static_cast<std::size_t>(start)][0];
    int label = start + 1;
    while (true) {
      seen[static_cast<std::size_t>(label - 1)] = 1;
      const SlotRef exit{entry.crossing, (entry.slot + 2) % 4};
      label = crossings[static_cast<std::size_t>(exit.crossing)][exit.slot];
      if (label == start + 1) break;
      const auto& occ = at[static_cast<std::size_t>(label - 1)];
      entry = occ[0] == exit ? occ[1] : occ[0];
    }
  }
  return components;
}

LoadedDiagram load_into_builder(const OrientedDiagram& od, const std::vector<std::pair<int, int>>& split) {
  LoadedDiagram out;
  const Diagram& d = od.diagram;
  const int edges = d.attachable_edges();
  std::vector<int> count(static_cast<std::size_t>(edges), 1);
  for (const auto& [edge, pieces] : split) {
    if (edge < 1 || edge > edges || pieces < 1) throw std::logic_error("bad split request");
    count[static_cast<std::size_t>(edge - 1)] = pieces;
  }
  out.edge_pieces.resize(static_cast<std::size_t>(edges));
  for (int e = 0; e < edges; ++e) {
    for (int k = 0; k < count[static_cast<std::size_t>(e)]; ++k) {
      out.edge_pieces[static_cast<std::size_t>(e)].push_back(out.builder.add_piece());
    }
  }
  if (d.crossing_count() == 0) {
    const auto& chain = out.edge_pieces[0];
    out.builder.join({chain.back(), 1}, {chain.front(), 0});
    return out;
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    std::array<PieceEnd, 4> slots{};
    for (int s = 0; s < 4; ++s) {
      const int label = d.crossing(c)[s];
      const auto& chain = out.edge_pieces[static_cast<std::size_t>(label - 1)];
      slots[static_cast<std::size_t>(s)] =
          od.is_tail({c, s}) ? PieceEnd{chain.front(), 0} : PieceEnd{chain.back(), 1};
    }
    out.builder.add_crossing(slots);
  }
  return out;
}

}  // namespace pinchband
