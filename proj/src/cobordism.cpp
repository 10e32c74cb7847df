#include "pinchband/cobordism.hpp"

#include <algorithm>
#include <set>

#include "pinchband/errors.hpp"
#include "pinchband/goeritz.hpp"
#include "pinchband/strand_builder.hpp"

namespace pinchband {

std::string_view to_string(Level l) { return l == Level::over ? "over" : "under"; }

Level level_from_string(std::string_view text) {
  if (text == "over") return Level::over;
  if (text == "under") return Level::under;
  throw SyntaxError("level must be \"over\" or \"under\", got \"" + std::string(text) + "\"");
}

namespace {

/// Direction of each routing passage: true when the band moves from the right
/// face of the crossed edge to its left face.
std::vector<bool> walk_faces(const FaceStructure& fs, int start_face, const std::vector<RouteStep>& routing,
                             std::optional<int> end_face) {
  std::vector<bool> right_to_left;
  std::set<int> visited{start_face};
  int face = start_face;
  for (const RouteStep& step : routing) {
    const int left = fs.face_of({step.edge, Side::left});
    const int right = fs.face_of({step.edge, Side::right});
    if (face == right) {
      right_to_left.push_back(true);
      face = left;
    } else if (face == left) {
      right_to_left.push_back(false);
      face = right;
    } else {
      throw InvalidSite("routing edge " + std::to_string(step.edge) + " does not bound the current face");
    }
    if (!visited.insert(face).second) throw InvalidSite("routing revisits a face");
  }
  if (end_face && face != *end_face) throw InvalidSite("routing does not end at the far attachment");
  return right_to_left;
}

void check_routing_edges(const Diagram& d, const std::vector<RouteStep>& routing, const std::set<int>& forbidden) {
  std::set<int> seen;
  for (const RouteStep& step : routing) {
    if (step.edge < 1 || step.edge > d.attachable_edges()) {
      throw InvalidSite("routing edge " + std::to_string(step.edge) + " does not exist");
    }
    if (forbidden.contains(step.edge)) throw InvalidSite("routing crosses an attachment edge");
    if (!seen.insert(step.edge).second) throw InvalidSite("routing crosses an edge twice");
  }
}

void check_attachment(const Diagram& d, const Attachment& a) {
  if (a.edge < 1 || a.edge > d.attachable_edges()) {
    throw InvalidSite("attachment edge " + std::to_string(a.edge) + " does not exist");
  }
  if (a.order != 0 && a.order != 1) throw InvalidSite("attachment order must be 0 or 1");
}

struct Band {
  std::vector<int> left;   // pieces oriented from the near end to the far end
  std::vector<int> right;
};

/// Adds the band's two long edges and their crossings with the routing edges.
Band lay_band(LoadedDiagram& ld, const std::vector<RouteStep>& routing, const std::vector<bool>& right_to_left) {
  StrandBuilder& b = ld.builder;
  Band band;
  for (std::size_t i = 0; i <= routing.size(); ++i) {
    band.left.push_back(b.add_piece());
    band.right.push_back(b.add_piece());
  }
  for (std::size_t i = 0; i < routing.size(); ++i) {
    const auto& chain = ld.edge_pieces[static_cast<std::size_t>(routing[i].edge - 1)];
    // Local frame: the crossed edge runs west to east.
    const std::array<std::pair<PieceEnd, PieceEnd>, 2> cuts{{{{chain[0], 1}, {chain[1], 0}},
                                                             {{chain[1], 1}, {chain[2], 0}}}};
    const std::array<std::vector<int>*, 2> strands =
        right_to_left[i] ? std::array{&band.left, &band.right} : std::array{&band.right, &band.left};
    for (int k = 0; k < 2; ++k) {
      const auto& [west, east] = cuts[static_cast<std::size_t>(k)];
      const PieceEnd before{(*strands[static_cast<std::size_t>(k)])[i], 1};
      const PieceEnd after{(*strands[static_cast<std::size_t>(k)])[i + 1], 0};
      std::array<PieceEnd, 4> slots = right_to_left[i] ? std::array{west, before, east, after}
                                                       : std::array{west, after, east, before};
      if (routing[i].level == Level::under) std::rotate(slots.begin(), slots.begin() + 1, slots.end());
      b.add_crossing(slots);
    }
  }
  return band;
}

void join_near_end(StrandBuilder& b, const Band& band, Side side, int p_in, int p_out) {
  const int toward_in = side == Side::left ? band.left.front() : band.right.front();
  const int toward_out = side == Side::left ? band.right.front() : band.left.front();
  b.join({p_in, 1}, {toward_in, 0});
  b.join({p_out, 0}, {toward_out, 0});
}

void join_far_end(StrandBuilder& b, const Band& band, Side side, int q_in, int q_out) {
  const int to_out = side == Side::left ? band.left.back() : band.right.back();
  const int to_in = side == Side::left ? band.right.back() : band.left.back();
  b.join({to_out, 1}, {q_out, 0});
  b.join({to_in, 1}, {q_in, 1});
}

struct Surgery {
  Diagram result;
  Diagram raw;                 // before normalization
  std::vector<int> label_map;  // raw label - 1 -> result label
  StrandBuilder builder;
  std::vector<int> piece_label;
  Band band;
};

H2MoveSite canonical(const H2MoveSite& site) {
  if (site.clasp_sign == 1) return site;
  if (site.clasp_sign != -1) throw InvalidSite("clasp sign must be +1 or -1");
  H2MoveSite c;
  c.attach = {site.attach[1], site.attach[0]};
  c.routing.assign(site.routing.rbegin(), site.routing.rend());
  c.clasp_sign = 1;
  return c;
}

Diagram finish(const StrandBuilder::Built& built, const std::string& label, Surgery* out) {
  if (built.components != 1) {
    throw NonKnotResult("surgery produced " + std::to_string(built.components) + " components");
  }
  Diagram raw(built.crossings, label);
  Normalized n = normalize_with_map(raw);
  if (out) {
    out->raw = raw;
    out->label_map = n.label_map;
    out->piece_label = built.piece_label;
  }
  return n.diagram;
}

Diagram perform(const Diagram& d, const H2MoveSite& raw_site, Surgery* out) {
  const H2MoveSite site = canonical(raw_site);
  const Attachment& p = site.attach[0];
  const Attachment& q = site.attach[1];
  check_attachment(d, p);
  check_attachment(d, q);
  const bool same_edge = p.edge == q.edge;
  if (same_edge && p.order == q.order) throw InvalidSite("attachments on one edge need distinct orders");
  if (!same_edge && (p.order != 0 || q.order != 0)) throw InvalidSite("order is only meaningful on a shared edge");
  check_routing_edges(d, site.routing, {p.edge, q.edge});

  const OrientedDiagram od = orient(d);
  const FaceStructure fs = face_structure(od);
  const std::vector<bool> dirs =
      walk_faces(fs, fs.face_of({p.edge, p.side}), site.routing, fs.face_of({q.edge, q.side}));

  std::vector<std::pair<int, int>> split;
  if (same_edge) {
    split.emplace_back(p.edge, 3);
  } else {
    split.emplace_back(p.edge, 2);
    split.emplace_back(q.edge, 2);
  }
  for (const RouteStep& s : site.routing) split.emplace_back(s.edge, 3);
  LoadedDiagram ld = load_into_builder(od, split);

  const Band band = lay_band(ld, site.routing, dirs);
  int p_in, p_out, q_in, q_out;
  if (same_edge) {
    const auto& chain = ld.edge_pieces[static_cast<std::size_t>(p.edge - 1)];
    const bool p_first = p.order == 0;
    p_in = p_first ? chain[0] : chain[1];
    p_out = p_first ? chain[1] : chain[2];
    q_in = p_first ? chain[1] : chain[0];
    q_out = p_first ? chain[2] : chain[1];
  } else {
    const auto& pc = ld.edge_pieces[static_cast<std::size_t>(p.edge - 1)];
    const auto& qc = ld.edge_pieces[static_cast<std::size_t>(q.edge - 1)];
    p_in = pc[0];
    p_out = pc[1];
    q_in = qc[0];
    q_out = qc[1];
  }
  join_near_end(ld.builder, band, p.side, p_in, p_out);
  join_far_end(ld.builder, band, q.side, q_in, q_out);

  const StrandBuilder::Built built = ld.builder.build();
  Diagram result = finish(built, d.label().empty() ? std::string{} : "h2(" + d.label() + ")", out);
  if (out) {
    out->builder = ld.builder;
    out->band = band;
    out->result = result;
  }
  return result;
}

}  // namespace

Diagram apply_h2(const Diagram& d, const H2MoveSite& site) { return perform(d, site, nullptr); }

H2MoveSite reverse_site(const Diagram& d, const H2MoveSite& site) {
  Surgery s;
  perform(d, site, &s);
  const int l0 = s.band.left.front();
  const int r0 = s.band.right.front();
  const std::optional<SlotRef> slot = s.builder.walk_to_slot(l0, 1);
  if (!slot) throw InvalidSite("move result has no crossings to anchor a dual band");
  // Along the knot both band edges run the same way, from the near end to the
  // far end or back; the band interior is on the right of its left edge.
  const bool agree = !orient(s.raw).is_tail(*slot);
  const int lab_l = s.label_map[static_cast<std::size_t>(s.piece_label[static_cast<std::size_t>(l0)] - 1)];
  const int lab_r = s.label_map[static_cast<std::size_t>(s.piece_label[static_cast<std::size_t>(r0)] - 1)];
  if (lab_l == lab_r) throw InvalidSite("band edges share an edge label; dual band is ambiguous");
  H2MoveSite dual;
  dual.attach = {Attachment{lab_l, agree ? Side::right : Side::left, 0},
                 Attachment{lab_r, agree ? Side::left : Side::right, 0}};
  dual.clasp_sign = 1;
  return dual;
}

Diagram insert_finger(const Diagram& d, Attachment from, const std::vector<RouteStep>& routing) {
  check_attachment(d, from);
  if (from.order != 0) throw InvalidSite("finger attachment order must be 0");
  check_routing_edges(d, routing, {from.edge});
  const OrientedDiagram od = orient(d);
  const FaceStructure fs = face_structure(od);
  const std::vector<bool> dirs = walk_faces(fs, fs.face_of({from.edge, from.side}), routing, std::nullopt);

  std::vector<std::pair<int, int>> split{{from.edge, 2}};
  for (const RouteStep& s : routing) split.emplace_back(s.edge, 3);
  LoadedDiagram ld = load_into_builder(od, split);
  const Band band = lay_band(ld, routing, dirs);
  const auto& chain = ld.edge_pieces[static_cast<std::size_t>(from.edge - 1)];
  join_near_end(ld.builder, band, from.side, chain[0], chain[1]);
  ld.builder.join({band.left.back(), 1}, {band.right.back(), 1});
  return finish(ld.builder.build(), d.label(), nullptr);
}

Rational cobordism_sigma(int sigma1, int sigma2, int w1, int w2) {
  return Rational(sigma2 - sigma1) + Rational(w2 - w1, 2);
}

PinchCertificate make_certificate(const Diagram& d, const H2MoveSite& site) {
  PinchCertificate c;
  c.pd_before = d;
  c.pd_after = apply_h2(d, site);
  c.site = site;
  const KnotId before = identify_known(c.pd_before);
  const KnotId after = identify_known(c.pd_after);
  c.knot_before = before.name;
  c.knot_after = after.name;
  c.writhe_before = writhe(c.pd_before);
  c.writhe_after = writhe(c.pd_after);
  c.sigma_before = before.fingerprint.signature;
  c.sigma_after = after.fingerprint.signature;
  const Rational s = cobordism_sigma(c.sigma_before, c.sigma_after, c.writhe_before, c.writhe_after);
  if (!s.is_integer()) throw NonIntegralSigma("cobordism signature " + s.str() + " is not an integer");
  c.sigma_cover_cobordism = static_cast<int>(s.num());
  c.extended_model = !site.routing.empty();
  return c;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify_certificate(const PinchCertificate& cert) {
  VerificationReport r;
  auto check = [&r](std::string field, bool pass, std::string detail) {
    r.checks.push_back({std::move(field), pass, std::move(detail)});
  };
  auto expect_int = [&check](const std::string& field, long long stored, long long actual) {
    check(field, stored == actual, "stored " + std::to_string(stored) + ", recomputed " + std::to_string(actual));
  };

  try {
    const Diagram again = apply_h2(cert.pd_before, cert.site);
    check("pd_after", again == cert.pd_after, again == cert.pd_after ? "move reproduced" : "move gives " + emit_pd(again));
  } catch (const Error& e) {
    check("pd_after", false, e.what());
  }

  auto identity = [&check](const std::string& field, const Diagram& d, const std::string& stored) {
    try {
      const Identification id = identify(d);
      const std::string got = id.kind == Identification::Kind::known ? id.knot->name : "(" + id.reason + ")";
      check(field, got == stored, "stored " + stored + ", identified " + got);
    } catch (const Error& e) {
      check(field, false, e.what());
    }
  };
  identity("knot_before", cert.pd_before, cert.knot_before);
  identity("knot_after", cert.pd_after, cert.knot_after);

  const int w1 = writhe(cert.pd_before);
  const int w2 = writhe(cert.pd_after);
  expect_int("writhe_before", cert.writhe_before, w1);
  expect_int("writhe_after", cert.writhe_after, w2);
  const int s1 = knot_signature(cert.pd_before).sigma;
  const int s2 = knot_signature(cert.pd_after).sigma;
  expect_int("sigma_before", cert.sigma_before, s1);
  expect_int("sigma_after", cert.sigma_after, s2);

  const Rational s = cobordism_sigma(s1, s2, w1, w2);
  check("sigma_cover_cobordism", s.is_integer() && s.num() == cert.sigma_cover_cobordism,
        "stored " + std::to_string(cert.sigma_cover_cobordism) + ", recomputed " + s.str());
  check("sigma_cover_bound", std::abs(cert.sigma_cover_cobordism) <= cert.b2_cover,
        "|" + std::to_string(cert.sigma_cover_cobordism) + "| <= b2 " + std::to_string(cert.b2_cover));
  expect_int("b2_cover", cert.b2_cover, 1);
  expect_int("b1_cobordism", cert.b1_cobordism, 1);
  check("extended_model", cert.extended_model == !cert.site.routing.empty(),
        cert.site.routing.empty() ? "local band" : "routed band");
  return r;
}

// ---------------------------------------------------------------------------
// ledgers

SurfaceLedger base_ledger(const KnotId& k) {
  if (!k.slice) throw NotKnownSlice(k.name + " has no known slice disk in the table");
  SurfaceLedger l;
  l.boundary = k.name;
  l.euler = 0;
  l.history.push_back("slice disk for " + k.name);
  return l;
}

SurfaceLedger seifert_ledger(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidN("Seifert ledger needs an odd n >= 3, got " + std::to_string(n));
  const std::string name = "T(2," + std::to_string(n) + ")";
  SurfaceLedger l;
  l.boundary = name;
  l.betti1 = n - 1;
  l.sigma_cover = knot_signature(torus_2n_diagram(n)).sigma;
  l.euler = 0;
  l.history.push_back("minimal genus Seifert surface for " + name);
  return l;
}

SurfaceLedger mobius_summand(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("Moebius band sign must be +1 or -1");
  SurfaceLedger l;
  l.boundary = "unknot";
  l.betti1 = 1;
  l.euler = 2 * sign;
  l.sigma_cover = -sign;
  l.orientable = false;
  l.history.push_back(std::string("standard Moebius band, e = ") + (sign > 0 ? "+2" : "-2"));
  return l;
}

SurfaceLedger glue_step(const SurfaceLedger& ledger, const CobordismStep& step) {
  if (ledger.boundary != step.knot_before) {
    throw BoundaryMismatch("surface bounds " + ledger.boundary + " but the cobordism starts at " + step.knot_before);
  }
  SurfaceLedger l = ledger;
  l.boundary = step.knot_after;
  l.betti1 += 1;
  l.sigma_cover += step.sigma_cover;
  l.orientable = false;
  l.euler = 2 * (step.sigma_after - l.sigma_cover);
  l.history.push_back(step.note.empty() ? "pinch " + step.knot_before + " -> " + step.knot_after : step.note);
  return l;
}

SurfaceLedger glue_pinch(const SurfaceLedger& ledger, const PinchCertificate& cert) {
  return glue_step(ledger, {cert.knot_before, cert.knot_after, cert.sigma_after, cert.sigma_cover_cobordism,
                            "pinch " + cert.knot_before + " -> " + cert.knot_after + ", sigma " +
                                std::to_string(cert.sigma_cover_cobordism)});
}

SurfaceLedger boundary_connect_sum(const SurfaceLedger& a, const SurfaceLedger& b) {
  if (b.boundary != "unknot") throw BoundaryMismatch("second summand must bound the unknot, not " + b.boundary);
  SurfaceLedger l = a;
  l.betti1 += b.betti1;
  l.sigma_cover += b.sigma_cover;
  l.euler = a.euler && b.euler ? std::optional<int>(*a.euler + *b.euler) : std::nullopt;
  l.orientable = a.orientable && b.orientable;
  l.history.insert(l.history.end(), b.history.begin(), b.history.end());
  return l;
}

bool gl_consistent(const SurfaceLedger& ledger) {
  const KnotId* k = nullptr;
  try {
    k = &knot_by_name(ledger.boundary);
  } catch (const UnknownName&) {
    return true;
  }
  if (ledger.orientable && ledger.euler && *ledger.euler != 0) return false;
  return ledger.euler && *ledger.euler == 2 * (k->fingerprint.signature - ledger.sigma_cover);
}

}  // namespace pinchband
