#include "eulerpoly/report.hpp"

namespace eulerpoly {

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    }
    return "error";
}

Json Report::to_json() const
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["status"] = status_name(status);
    return j;
}

Report Report::from_json(const Json& j)
{
    auto field = [&](const char* name) -> const Json& {
        if (!j.is_object() || !j.contains(name)) throw PreconditionError(std::string("report: missing field '") + name + "'");
        return j.at(name);
    };
    const Json& version = field("schema_version");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
        throw PreconditionError("report: unsupported schema_version");
    Report r;
    r.command = field("command").get<std::string>();
    r.inputs = field("inputs");
    r.results = field("results");
    const std::string status = field("status").get<std::string>();
    if (status == "pass") r.status = Status::pass;
    else if (status == "fail") r.status = Status::fail;
    else if (status == "error") r.status = Status::error;
    else throw PreconditionError("report: unknown status '" + status + "'");
    return r;
}

std::string serialize(const Report& r) { return r.to_json().dump(2) + "\n"; }

Report parse_report(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("report: ") + e.what());
    }
    return Report::from_json(j);
}

Json scalar_json(const Scalar& s) { return to_string(s); }

Json poly_json(const Poly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(scalar_json(c));
    return out;
}

Json gamma_json(const GammaVector& g)
{
    Json out = Json::array();
    for (const auto& c : g.entries) out.push_back(scalar_json(c));
    return out;
}

Json witness_json(const Witness& w)
{
    Json j;
    j["source"] = witness_source_name(w.source);
    j["lhs_indices"] = w.lhs_indices;
    j["rhs_indices"] = w.rhs_indices;
    j["lhs_factor"] = scalar_json(w.lhs_factor);
    j["rhs_factor"] = scalar_json(w.rhs_factor);
    j["lhs"] = scalar_json(w.lhs);
    j["rhs"] = scalar_json(w.rhs);
    j["required"] = w.inequality();
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

Json property_json(const PropertyReport& r)
{
    Json j;
    j["property"] = property_name(r.property);
    j["verdict"] = verdict_name(r.verdict);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.witness) j["witness"] = witness_json(*r.witness);
    if (r.alpha) j["alpha"] = gamma_json(*r.alpha);
    if (r.beta) j["beta"] = gamma_json(*r.beta);
    if (r.modes) j["modes"] = *r.modes;
    if (r.bounds) j["bounds"] = Json::array({to_string(r.bounds->first), to_string(r.bounds->second)});
    return j;
}

Json bipoly_json(const BiPoly& b)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < b.x_size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < b.q_size(); ++j) row.push_back(to_string(b.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace eulerpoly
