#include "pinchband/serialize.hpp"

#include "pinchband/errors.hpp"

namespace pinchband {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SyntaxError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json to_json(const H2MoveSite& s) {
  Json attach = Json::array();
  for (const Attachment& a : s.attach) {
    attach.push_back({{"edge", a.edge}, {"side", std::string(to_string(a.side))}, {"order", a.order}});
  }
  Json routing = Json::array();
  for (const RouteStep& r : s.routing) routing.push_back({{"edge", r.edge}, {"level", std::string(to_string(r.level))}});
  return {{"attach", attach}, {"routing", routing}, {"clasp_sign", s.clasp_sign}};
}

H2MoveSite site_from_json(const Json& j) {
  H2MoveSite s;
  const Json attach = field<Json>(j, "attach");
  if (!attach.is_array() || attach.size() != 2) throw SyntaxError("site.attach must hold two attachments");
  for (std::size_t i = 0; i < 2; ++i) {
    s.attach[i] = {field<int>(attach[i], "edge"), side_from_string(field<std::string>(attach[i], "side")),
                   field<int>(attach[i], "order")};
  }
  const Json routing = field<Json>(j, "routing");
  if (!routing.is_array()) throw SyntaxError("site.routing must be an array");
  for (const Json& r : routing) {
    s.routing.push_back({field<int>(r, "edge"), level_from_string(field<std::string>(r, "level"))});
  }
  s.clasp_sign = field<int>(j, "clasp_sign");
  return s;
}

Json to_json(const PinchCertificate& c) {
  return {{"pd_before", emit_pd(c.pd_before)},
          {"pd_after", emit_pd(c.pd_after)},
          {"site", to_json(c.site)},
          {"knot_before", c.knot_before},
          {"knot_after", c.knot_after},
          {"writhe_before", c.writhe_before},
          {"writhe_after", c.writhe_after},
          {"sigma_before", c.sigma_before},
          {"sigma_after", c.sigma_after},
          {"sigma_cover_cobordism", c.sigma_cover_cobordism},
          {"b2_cover", c.b2_cover},
          {"b1_cobordism", c.b1_cobordism},
          {"extended_model", c.extended_model}};
}

PinchCertificate certificate_from_json(const Json& j) {
  PinchCertificate c;
  c.pd_before = parse_pd(field<std::string>(j, "pd_before"));
  c.pd_after = parse_pd(field<std::string>(j, "pd_after"));
  c.site = site_from_json(field<Json>(j, "site"));
  c.knot_before = field<std::string>(j, "knot_before");
  c.knot_after = field<std::string>(j, "knot_after");
  c.writhe_before = field<int>(j, "writhe_before");
  c.writhe_after = field<int>(j, "writhe_after");
  c.sigma_before = field<int>(j, "sigma_before");
  c.sigma_after = field<int>(j, "sigma_after");
  c.sigma_cover_cobordism = field<int>(j, "sigma_cover_cobordism");
  c.b2_cover = field<int>(j, "b2_cover");
  c.b1_cobordism = field<int>(j, "b1_cobordism");
  c.extended_model = field<bool>(j, "extended_model");
  return c;
}

Json to_json(const SurfaceLedger& l) {
  return {{"boundary", l.boundary},
          {"betti1", l.betti1},
          {"sigma_cover", l.sigma_cover},
          {"euler", l.euler ? Json(*l.euler) : Json(nullptr)},
          {"orientable", l.orientable},
          {"negative_definite", l.negative_definite()},
          {"history", l.history}};
}

Json to_json(const SearchOptions& o) {
  return {{"max_routing_length", o.max_routing_length},
          {"target_knot", o.target_knot ? Json(*o.target_knot) : Json(nullptr)},
          {"target_sigma_cover", o.target_sigma_cover ? Json(*o.target_sigma_cover) : Json(nullptr)},
          {"max_result_crossings", o.max_result_crossings},
          {"site_limit", o.site_limit}};
}

Json to_json(const SearchStats& s) {
  return {{"sites", s.sites},
          {"certificates", s.certificates},
          {"skipped_unidentifiable", s.skipped_unidentifiable},
          {"skipped_filter", s.skipped_filter},
          {"errors_nonknot", s.errors_nonknot},
          {"errors_invalid_site", s.errors_invalid_site},
          {"errors_other", s.errors_other}};
}

Json to_json(const KnotFingerprint& f) {
  return {{"determinant", f.determinant}, {"signature", f.signature}, {"bracket", f.bracket.str()}};
}

Json to_json(const SignatureReport& r) {
  Json colorings = Json::array();
  for (const ColoringBreakdown& b : r.colorings) {
    colorings.push_back({{"form_signature", b.form_signature},
                         {"correction", b.correction},
                         {"dimension", b.dimension},
                         {"determinant", b.determinant}});
  }
  return {{"sigma", r.sigma}, {"determinant", r.determinant}, {"colorings", colorings}};
}

Json to_json(const PairStatus& s) {
  return {{"status", std::string(to_string(s.verdict))},
          {"clause", s.clause},
          {"m", s.m ? Json(*s.m) : Json(nullptr)},
          {"l", s.l ? Json(*s.l) : Json(nullptr)}};
}

Json to_json(const MinimalPointReport& r) {
  return {{"gamma4", r.gamma4}, {"minimal_points", r.minimal_points}, {"g4_orientable", r.g4_orientable}};
}

Json search_report(const Diagram& start, const SearchOptions& opts, const SearchResult& result) {
  Json certs = Json::array();
  for (const PinchCertificate& c : result.certificates) certs.push_back(to_json(c));
  return {{"start", emit_pd(start)},
          {"options", to_json(opts)},
          {"statistics", to_json(result.stats)},
          {"certificates", certs}};
}

Json paper_report(const PaperSearchReport& report) {
  Json runs = Json::array();
  for (const BatteryRun& r : report.runs) {
    Json certs = Json::array();
    for (const PinchCertificate& c : r.certificates) certs.push_back(to_json(c));
    runs.push_back({{"start", r.entry.name},
                    {"pd", emit_pd(r.entry.diagram)},
                    {"target", r.entry.target},
                    {"statistics", to_json(r.stats)},
                    {"certificates", certs}});
  }
  Json outcomes = Json::array();
  for (const LedgerOutcome& o : report.outcomes) {
    outcomes.push_back({{"reversed", o.reversed}, {"certificate", to_json(o.certificate)}, {"ledger", to_json(o.ledger)}});
  }
  Json goals = Json::array();
  for (const PaperGoal& g : report.goals) {
    goals.push_back({{"goal", g.description},
                     {"knot", g.torus},
                     {"euler", g.euler},
                     {"betti1", 1},
                     {"result", g.found ? "found" : "not found within budget"}});
  }
  return {{"options", to_json(report.options)}, {"runs", runs}, {"outcomes", outcomes}, {"goals", goals}};
}

std::vector<PinchCertificate> certificates_in_report(const Json& report) {
  std::vector<PinchCertificate> out;
  auto take = [&out](const Json& list) {
    for (const Json& c : list) out.push_back(certificate_from_json(c));
  };
  if (report.contains("certificates")) take(report.at("certificates"));
  if (report.contains("runs")) {
    for (const Json& r : report.at("runs")) take(field<Json>(r, "certificates"));
  }
  if (report.contains("outcomes")) {
    for (const Json& o : report.at("outcomes")) out.push_back(certificate_from_json(field<Json>(o, "certificate")));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace pinchband
