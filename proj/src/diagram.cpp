#include "pinchband/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "pinchband/errors.hpp"
#include "pinchband/strand_builder.hpp"

namespace pinchband {

std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }

Side side_from_string(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw SyntaxError("side must be \"left\" or \"right\", got \"" + std::string(text) + "\"");
}

namespace {

using Occurrences = std::vector<std::array<SlotRef, 2>>;

Occurrences occurrences(const std::vector<Crossing>& crossings) {
  const int labels = 2 * static_cast<int>(crossings.size());
  std::vector<std::vector<SlotRef>> at(static_cast<std::size_t>(labels));
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int l = crossings[static_cast<std::size_t>(c)][s];
      if (l < 1 || l > labels) {
        throw EdgeLabelError("edge label " + std::to_string(l) + " outside 1.." + std::to_string(labels));
      }
      at[static_cast<std::size_t>(l - 1)].push_back({c, s});
    }
  }
  Occurrences out(static_cast<std::size_t>(labels));
  for (int l = 0; l < labels; ++l) {
    const auto& v = at[static_cast<std::size_t>(l)];
    if (v.size() != 2) {
      throw EdgeLabelError("edge label " + std::to_string(l + 1) + " used " + std::to_string(v.size()) +
                           " times, expected 2");
    }
    out[static_cast<std::size_t>(l)] = {v[0], v[1]};
  }
  return out;
}

SlotRef other(const std::array<SlotRef, 2>& occ, SlotRef s) { return occ[0] == s ? occ[1] : occ[0]; }

int label_at(const std::vector<Crossing>& cs, SlotRef s) {
  return cs[static_cast<std::size_t>(s.crossing)][s.slot];
}

// Face cycles from corner walking: leave corner (c,k) through slot k+1, arrive
// at the far end (c',q) and continue with corner (c',q).
struct CornerFaces {
  std::vector<std::vector<SlotRef>> cycles;
  std::vector<std::array<int, 4>> corner_face;
};

CornerFaces corner_cycles(const std::vector<Crossing>& cs, const Occurrences& occ) {
  CornerFaces out;
  out.corner_face.assign(cs.size(), {-1, -1, -1, -1});
  for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
    for (int k = 0; k < 4; ++k) {
      if (out.corner_face[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] >= 0) continue;
      const int face = static_cast<int>(out.cycles.size());
      out.cycles.emplace_back();
      SlotRef corner{c, k};
      while (out.corner_face[static_cast<std::size_t>(corner.crossing)][static_cast<std::size_t>(corner.slot)] < 0) {
        out.corner_face[static_cast<std::size_t>(corner.crossing)][static_cast<std::size_t>(corner.slot)] = face;
        out.cycles.back().push_back(corner);
        const SlotRef leave{corner.crossing, (corner.slot + 1) % 4};
        corner = other(occ[static_cast<std::size_t>(label_at(cs, leave) - 1)], leave);
      }
    }
  }
  return out;
}

void validate(const std::vector<Crossing>& cs) {
  if (cs.empty()) return;
  const Occurrences occ = occurrences(cs);
  const int comps = count_components(cs);
  if (comps != 1) throw MultiComponentError("diagram has " + std::to_string(comps) + " components");
  const int v = static_cast<int>(cs.size());
  const int f = static_cast<int>(corner_cycles(cs, occ).cycles.size());
  if (v - 2 * v + f != 2) {
    throw PlanarityError("Euler check failed: V=" + std::to_string(v) + " E=" + std::to_string(2 * v) +
                         " F=" + std::to_string(f));
  }
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, std::string label)
    : crossings_(std::move(crossings)), label_(std::move(label)) {
  validate(crossings_);
}

Diagram Diagram::relabeled(std::string label) const {
  Diagram d = *this;
  d.label_ = std::move(label);
  return d;
}

bool OrientedDiagram::is_tail(SlotRef s) const {
  const int l = diagram.crossing(s.crossing)[s.slot];
  return ends(l).tail == s;
}

// ---------------------------------------------------------------------------
// PD text

namespace {

class PdLexer {
 public:
  explicit PdLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("expected \"" + std::string(w) + "\"");
    pos_ += w.size();
  }
  int integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail("expected a positive integer");
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail("integer out of range");
    if (value <= 0) fail("edge labels must be positive");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("PD syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd(std::string_view text) {
  PdLexer lex(text);
  lex.expect_word("PD");
  lex.expect('[');
  std::vector<Crossing> crossings;
  if (!lex.peek(']')) {
    while (true) {
      lex.expect_word("X");
      lex.expect('(');
      Crossing c;
      for (int i = 0; i < 4; ++i) {
        if (i > 0) lex.expect(',');
        c.slots[static_cast<std::size_t>(i)] = lex.integer();
      }
      lex.expect(')');
      crossings.push_back(c);
      if (lex.peek(']')) break;
      lex.expect(',');
    }
  }
  lex.expect(']');
  if (!lex.at_end()) lex.fail("trailing characters");
  return Diagram(std::move(crossings));
}

std::string emit_pd(const Diagram& d) {
  std::string out = "PD[";
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c > 0) out += ',';
    out += "X(";
    for (int s = 0; s < 4; ++s) {
      if (s > 0) out += ',';
      out += std::to_string(d.crossing(c)[s]);
    }
    out += ')';
  }
  out += ']';
  return out;
}

// ---------------------------------------------------------------------------
// Orientation

OrientedDiagram orient(const Diagram& d) {
  OrientedDiagram od;
  od.diagram = d;
  const auto& cs = d.crossings();
  if (cs.empty()) return od;

  const Occurrences occ = occurrences(cs);
  const int labels = d.edge_count();

  // Head of edge 1: prefer what the PD convention says (slot 0 is an incoming
  // under edge, slot 2 an outgoing one); fall back to label continuity.
  const auto& first = occ[0];
  SlotRef head;
  if (first[0].slot == 0) {
    head = first[0];
  } else if (first[1].slot == 0) {
    head = first[1];
  } else if (first[0].slot == 2) {
    head = first[1];
  } else if (first[1].slot == 2) {
    head = first[0];
  } else {
    const int next = labels >= 2 ? 2 : 1;
    const int after0 = label_at(cs, {first[0].crossing, (first[0].slot + 2) % 4});
    head = after0 == next ? first[0] : first[1];
    const int after1 = label_at(cs, {first[1].crossing, (first[1].slot + 2) % 4});
    if (after0 != next && after1 != next) head = first[0];
  }

  od.edges.resize(static_cast<std::size_t>(labels));
  od.under_in.assign(cs.size(), -1);
  od.over_in.assign(cs.size(), -1);
  SlotRef entry = head;
  int label = 1;
  while (true) {
    od.traversal.push_back(label);
    auto& ends = od.edges[static_cast<std::size_t>(label - 1)];
    ends.head = entry;
    ends.tail = other(occ[static_cast<std::size_t>(label - 1)], entry);
    if (entry.slot % 2 == 0) {
      od.under_in[static_cast<std::size_t>(entry.crossing)] = entry.slot;
    } else {
      od.over_in[static_cast<std::size_t>(entry.crossing)] = entry.slot;
    }
    const SlotRef exit{entry.crossing, (entry.slot + 2) % 4};
    label = label_at(cs, exit);
    if (label == 1) break;
    entry = other(occ[static_cast<std::size_t>(label - 1)], exit);
  }
  if (static_cast<int>(od.traversal.size()) != labels) {
    throw MultiComponentError("traversal does not visit every edge");
  }

  od.signs.resize(cs.size());
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const int under_out = (od.under_in[c] + 2) % 4;
    const int over_out = (od.over_in[c] + 2) % 4;
    od.signs[c] = over_out == (under_out + 3) % 4 ? 1 : -1;
    od.writhe += od.signs[c];
  }
  return od;
}

int writhe(const OrientedDiagram& od) { return od.writhe; }
int writhe(const Diagram& d) { return orient(d).writhe; }

Normalized normalize_with_map(const Diagram& d) {
  Normalized out;
  if (d.crossing_count() == 0) {
    out.diagram = d;
    return out;
  }
  const OrientedDiagram od = orient(d);
  out.label_map.assign(static_cast<std::size_t>(d.edge_count()), 0);
  for (std::size_t i = 0; i < od.traversal.size(); ++i) {
    out.label_map[static_cast<std::size_t>(od.traversal[i] - 1)] = static_cast<int>(i) + 1;
  }
  std::vector<Crossing> cs;
  cs.reserve(d.crossings().size());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int shift = od.under_in[static_cast<std::size_t>(c)];
    Crossing x;
    for (int s = 0; s < 4; ++s) {
      x.slots[static_cast<std::size_t>(s)] = out.label_map[static_cast<std::size_t>(d.crossing(c)[(s + shift) % 4] - 1)];
    }
    cs.push_back(x);
  }
  out.diagram = Diagram(std::move(cs), d.label());
  return out;
}

Diagram normalize(const Diagram& d) { return normalize_with_map(d).diagram; }

Diagram mirror(const Diagram& d) {
  if (d.crossing_count() == 0) return d;
  const OrientedDiagram od = orient(d);
  std::vector<Crossing> cs;
  cs.reserve(d.crossings().size());
  for (int c = 0; c < d.crossing_count(); ++c) {
    // New slot 0 is the over slot whose in/out status matches the old slot 0.
    const bool slot0_incoming = od.under_in[static_cast<std::size_t>(c)] == 0;
    const int over_in = od.over_in[static_cast<std::size_t>(c)];
    const int start = slot0_incoming ? over_in : (over_in + 2) % 4;
    Crossing x;
    for (int s = 0; s < 4; ++s) x.slots[static_cast<std::size_t>(s)] = d.crossing(c)[(start + s) % 4];
    cs.push_back(x);
  }
  std::string label = d.label().empty() ? std::string{} : "mirror(" + d.label() + ")";
  return Diagram(std::move(cs), std::move(label));
}

// ---------------------------------------------------------------------------
// Faces

FaceStructure face_structure(const OrientedDiagram& od) {
  FaceStructure fs;
  const auto& cs = od.diagram.crossings();
  if (cs.empty()) {
    fs.faces.push_back({{}, {EdgeSide{1, Side::left}}});
    fs.faces.push_back({{}, {EdgeSide{1, Side::right}}});
    fs.edge_faces.push_back({0, 1});
    return fs;
  }
  const Occurrences occ = occurrences(cs);
  CornerFaces cf = corner_cycles(cs, occ);
  fs.corner_faces = cf.corner_face;
  fs.edge_faces.assign(static_cast<std::size_t>(od.diagram.edge_count()), {-1, -1});
  for (int f = 0; f < static_cast<int>(cf.cycles.size()); ++f) {
    Face face;
    face.corners = cf.cycles[static_cast<std::size_t>(f)];
    for (const SlotRef& corner : face.corners) {
      // Walking outward through slot k+1 keeps this face on the right.
      const SlotRef leave{corner.crossing, (corner.slot + 1) % 4};
      const int label = label_at(cs, leave);
      const Side side = od.is_tail(leave) ? Side::right : Side::left;
      face.boundary.push_back({label, side});
      fs.edge_faces[static_cast<std::size_t>(label - 1)][static_cast<std::size_t>(side)] = f;
    }
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

std::vector<Face> faces(const Diagram& d) {
  std::vector<Face> out = face_structure(orient(d)).faces;
  if (static_cast<int>(out.size()) != d.crossing_count() + 2) {
    throw PlanarityError("face count " + std::to_string(out.size()) + " != crossings + 2");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

Diagram braid_closure(int strands, std::span<const int> word, std::string label) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  StrandBuilder b;
  std::vector<int> bottom(static_cast<std::size_t>(strands));
  for (auto& p : bottom) p = b.add_piece();
  std::vector<int> current = bottom;
  for (const int g : word) {
    const int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw std::invalid_argument("braid generator out of range");
    const int bl = current[static_cast<std::size_t>(i)];
    const int br = current[static_cast<std::size_t>(i + 1)];
    const int tl = b.add_piece();
    const int tr = b.add_piece();
    // Strands run upward. Counterclockwise from bottom-left: BL, BR, TR, TL.
    if (g > 0) {
      // over strand BL -> TR, under strand BR -> TL
      b.add_crossing({PieceEnd{br, 1}, PieceEnd{tr, 0}, PieceEnd{tl, 0}, PieceEnd{bl, 1}});
    } else {
      // over strand BR -> TL, under strand BL -> TR
      b.add_crossing({PieceEnd{bl, 1}, PieceEnd{br, 1}, PieceEnd{tr, 0}, PieceEnd{tl, 0}});
    }
    current[static_cast<std::size_t>(i)] = tl;
    current[static_cast<std::size_t>(i + 1)] = tr;
  }
  for (int i = 0; i < strands; ++i) {
    b.join({current[static_cast<std::size_t>(i)], 1}, {bottom[static_cast<std::size_t>(i)], 0});
  }
  StrandBuilder::Built built = b.build();
  if (built.components != 1) {
    throw MultiComponentError("braid closure has " + std::to_string(built.components) + " components");
  }
  return normalize(Diagram(std::move(built.crossings), std::move(label)));
}

Diagram torus_2n_diagram(int n) {
  if (n < 1 || n % 2 == 0) throw EvenParameter("T(2,n) needs an odd positive n, got " + std::to_string(n));
  const std::vector<int> word(static_cast<std::size_t>(n), 1);
  return braid_closure(2, word, "T(2," + std::to_string(n) + ")");
}

namespace {

struct TableRow {
  const char* name;
  const char* alias;
  const char* pd;
};

// Fixed PD constants. Non-torus entries use the Rolfsen-table chirality of the
// usual knot-atlas codes; torus entries are the closed positive 2-braids.
constexpr TableRow kTable[] = {
    {"unknot", "0_1", "PD[]"},
    {"T(2,3)", "3_1", "PD[X(1,5,2,4),X(5,3,6,2),X(3,1,4,6)]"},
    {"4_1", "", "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"},
    {"T(2,5)", "5_1", "PD[X(1,7,2,6),X(7,3,8,2),X(3,9,4,8),X(9,5,10,4),X(5,1,6,10)]"},
    {"5_2", "", "PD[X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)]"},
    {"6_1", "", "PD[X(1,4,2,5),X(7,10,8,11),X(3,9,4,8),X(9,3,10,2),X(5,12,6,1),X(11,6,12,7)]"},
    {"6_2", "", "PD[X(1,4,2,5),X(5,10,6,11),X(3,9,4,8),X(9,3,10,2),X(7,12,8,1),X(11,6,12,7)]"},
    {"6_3", "", "PD[X(4,2,5,1),X(8,4,9,3),X(12,9,1,10),X(10,5,11,6),X(6,11,7,12),X(2,8,3,7)]"},
    {"T(2,7)", "7_1",
     "PD[X(1,9,2,8),X(9,3,10,2),X(3,11,4,10),X(11,5,12,4),X(5,13,6,12),X(13,7,14,6),X(7,1,8,14)]"},
    {"T(2,9)", "9_1",
     "PD[X(1,11,2,10),X(11,3,12,2),X(3,13,4,12),X(13,5,14,4),X(5,15,6,14),X(15,7,16,6),X(7,17,8,16),"
     "X(17,9,18,8),X(9,1,10,18)]"},
    {"T(2,11)", "11a367",
     "PD[X(1,13,2,12),X(13,3,14,2),X(3,15,4,14),X(15,5,16,4),X(5,17,6,16),X(17,7,18,6),X(7,19,8,18),"
     "X(19,9,20,8),X(9,21,10,20),X(21,11,22,10),X(11,1,12,22)]"},
};

}  // namespace

std::vector<std::string> table_names() {
  std::vector<std::string> names;
  for (const auto& row : kTable) names.emplace_back(row.name);
  return names;
}

std::string table_alias(std::string_view name) {
  for (const auto& row : kTable) {
    if (name == row.name) return row.alias;
  }
  throw UnknownName("unknown knot name \"" + std::string(name) + "\"");
}

Diagram table_diagram(std::string_view name) {
  if (name.size() > 1 && name.front() == 'm' && name != "m") {
    // "m6_1", "mT(2,5)", ...
    Diagram base = table_diagram(name.substr(1));
    return mirror(base).relabeled(std::string(name));
  }
  for (const auto& row : kTable) {
    if (name == row.name || (row.alias[0] != '\0' && name == row.alias)) {
      return parse_pd(row.pd).relabeled(row.name);
    }
  }
  if (name.starts_with("T(2,") && name.ends_with(")")) {
    const std::string_view inner = name.substr(4, name.size() - 5);
    int n = 0;
    auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), n);
    if (ec != std::errc{} || ptr != inner.data() + inner.size()) {
      throw UnknownName("unknown knot name \"" + std::string(name) + "\"");
    }
    if (n < 0) return mirror(table_diagram("T(2," + std::to_string(-n) + ")")).relabeled(std::string(name));
    return torus_2n_diagram(n);
  }
  throw UnknownName("unknown knot name \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------
// Reidemeister I insertion

Diagram insert_curl(const Diagram& d, int edge, int sign, Side side) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("curl sign must be +1 or -1");
  if (edge < 1 || edge > d.attachable_edges()) throw std::invalid_argument("curl edge out of range");
  const OrientedDiagram od = orient(d);
  LoadedDiagram ld = load_into_builder(od, {{edge, 2}});
  StrandBuilder& b = ld.builder;
  const auto& chain = ld.edge_pieces[static_cast<std::size_t>(edge - 1)];
  const int loop = b.add_piece();
  // Local frame: the edge arrives from the west and first passes west to east.
  const PieceEnd w{chain[0], 1};
  const PieceEnd e{loop, 0};
  if (side == Side::left) {
    const PieceEnd n{loop, 1};
    const PieceEnd s{chain[1], 0};
    if (sign > 0) b.add_crossing({w, s, e, n});
    else b.add_crossing({n, w, s, e});
  } else {
    const PieceEnd s{loop, 1};
    const PieceEnd n{chain[1], 0};
    if (sign < 0) b.add_crossing({w, s, e, n});
    else b.add_crossing({s, e, n, w});
  }
  StrandBuilder::Built built = b.build();
  return normalize(Diagram(std::move(built.crossings), d.label()));
}

}  // namespace pinchband
