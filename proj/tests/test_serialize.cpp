#include <doctest.h>

#include "pinchband/errors.hpp"
#include "pinchband/serialize.hpp"

using namespace pinchband;

namespace {

PinchCertificate routed_certificate() {
  SearchOptions opts;
  opts.max_routing_length = 1;
  for (const PinchCertificate& c : pinch_search(table_diagram("6_1"), opts).certificates) {
    if (!c.site.routing.empty()) return c;
  }
  FAIL("no routed certificate from 6_1");
  return {};
}

}  // namespace

TEST_CASE("certificates round-trip bit-exactly") {
  const PinchCertificate c = routed_certificate();
  CHECK(c.extended_model);
  const std::string text = dump(to_json(c));
  const PinchCertificate back = certificate_from_json(parse_json(text));
  CHECK(back == c);
  CHECK(dump(to_json(back)) == text);
  CHECK(verify_certificate(back).ok());
}

TEST_CASE("sites round-trip") {
  H2MoveSite s;
  s.attach = {Attachment{3, Side::right, 0}, Attachment{3, Side::left, 1}};
  s.routing = {{5, Level::under}, {7, Level::over}};
  s.clasp_sign = -1;
  CHECK(site_from_json(to_json(s)) == s);
  const Json j = to_json(s);
  CHECK(j.dump() ==
        R"({"attach":[{"edge":3,"side":"right","order":0},{"edge":3,"side":"left","order":1}],)"
        R"("routing":[{"edge":5,"level":"under"},{"edge":7,"level":"over"}],"clasp_sign":-1})");
}

TEST_CASE("search reports round-trip") {
  SearchOptions opts;
  opts.target_knot = "unknot";
  const Diagram d = torus_2n_diagram(5);
  const SearchResult r = pinch_search(d, opts);
  const std::string text = dump(search_report(d, opts, r));
  const Json j = parse_json(text);
  CHECK(j.at("statistics").at("sites") == 440);
  CHECK(j.at("options").at("target_knot") == "unknot");
  CHECK(certificates_in_report(j) == r.certificates);
  CHECK(dump(search_report(d, opts, pinch_search(d, opts))) == text);
}

TEST_CASE("paper reports round-trip") {
  SearchOptions opts;
  const PaperSearchReport r = find_paper_certificates(opts);
  const Json j = parse_json(dump(paper_report(r)));
  std::vector<PinchCertificate> expected;
  for (const BatteryRun& run : r.runs) expected.insert(expected.end(), run.certificates.begin(), run.certificates.end());
  for (const LedgerOutcome& o : r.outcomes) expected.push_back(o.certificate);
  CHECK(certificates_in_report(j) == expected);
  REQUIRE(j.at("goals").size() == 2);
  CHECK(j.at("goals")[0].at("result") == "found");
  CHECK(j.at("goals")[1].at("result") == "not found within budget");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_json("{\"pd_before\": "), SyntaxError);
  Json j = to_json(routed_certificate());
  j.erase("writhe_after");
  CHECK_THROWS_AS(certificate_from_json(j), SyntaxError);
  j = to_json(routed_certificate());
  j["writhe_after"] = "five";
  CHECK_THROWS_AS(certificate_from_json(j), SyntaxError);
  j = to_json(routed_certificate());
  j["site"]["routing"][0]["level"] = "sideways";
  CHECK_THROWS_AS(certificate_from_json(j), Error);
  j = to_json(routed_certificate());
  j["pd_after"] = "PD[X(1,2,3)]";
  CHECK_THROWS_AS(certificate_from_json(j), SyntaxError);
}

TEST_CASE("ledgers and invariants serialize") {
  const Json l = to_json(mobius_summand(1));
  CHECK(l.at("euler") == 2);
  CHECK(l.at("negative_definite") == true);
  const Json s = to_json(knot_signature(torus_2n_diagram(5)));
  CHECK(s.at("sigma") == -4);
  CHECK(s.at("colorings").size() == 2);
  const Json p = to_json(status_post({5, -6, 1}));
  CHECK(p.at("status") == "Realizable");
  CHECK(p.at("l").is_null());
}
