#pragma once

// JSON report layout shared by every CLI command. Rationals are strings
// ("3", "-3/4"); nothing is ever written as a float.

#include "eulerpoly/analysis.hpp"
#include "eulerpoly/oracle.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace eulerpoly {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Status { pass, fail, error };
std::string_view status_name(Status s);

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::array();
    Status status = Status::pass;

    Json to_json() const;
    /// Throws PreconditionError on a missing field or a different schema_version.
    static Report from_json(const Json& j);
};

/// Pretty-printed JSON followed by a newline.
std::string serialize(const Report& r);
Report parse_report(std::string_view text);

Json scalar_json(const Scalar& s);
Json poly_json(const Poly& p);
Json gamma_json(const GammaVector& g);
Json witness_json(const Witness& w);
Json property_json(const PropertyReport& r);
/// Rows indexed by x-power, each a list of q-power coefficients.
Json bipoly_json(const BiPoly& b);

} // namespace eulerpoly
