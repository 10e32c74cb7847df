#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pinchband/cobordism.hpp"
#include "pinchband/goeritz.hpp"
#include "pinchband/identify.hpp"
#include "pinchband/realizability.hpp"
#include "pinchband/search.hpp"

namespace pinchband {

using Json = nlohmann::ordered_json;

/// Field order is fixed, so dump() of a parsed certificate reproduces the
/// text it was read from whenever that text was written by dump(2).
Json to_json(const PinchCertificate& c);
PinchCertificate certificate_from_json(const Json& j);

Json to_json(const H2MoveSite& s);
H2MoveSite site_from_json(const Json& j);

Json to_json(const SurfaceLedger& l);
Json to_json(const SearchOptions& o);
Json to_json(const SearchStats& s);
Json to_json(const SignatureReport& r);
Json to_json(const KnotFingerprint& f);
Json to_json(const PairStatus& s);
Json to_json(const MinimalPointReport& r);

Json search_report(const Diagram& start, const SearchOptions& opts, const SearchResult& result);
Json paper_report(const PaperSearchReport& report);

/// Every certificate embedded in a search or paper report, in document order.
std::vector<PinchCertificate> certificates_in_report(const Json& report);

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Throws SyntaxError on malformed text or missing fields.
Json parse_json(std::string_view text);

}  // namespace pinchband
