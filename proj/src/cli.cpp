#include "eulerpoly/cli.hpp"

#include "eulerpoly/analysis.hpp"
#include "eulerpoly/families.hpp"
#include "eulerpoly/lemma.hpp"
#include "eulerpoly/oracle.hpp"
#include "eulerpoly/report.hpp"
#include "eulerpoly/series.hpp"
#include "eulerpoly/sweeps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace eulerpoly {

namespace {

constexpr std::array<const char*, 7> kParamNames{"a", "b", "c", "p", "q", "r", "k"};

constexpr std::array<Property, 9> kAllProperties{
    Property::unimodal,       Property::log_concave, Property::spiral,
    Property::alternatingly_increasing, Property::ratio_monotone, Property::gamma_positive,
    Property::bi_gamma,       Property::darroch,     Property::real_rooted,
};

struct Options {
    std::string format = "text";
    std::string out_file;
    std::string config;
    std::string family;
    std::map<std::string, std::string> params;
    std::size_t n = 0;
    bool has_n = false;
    std::size_t n_max = 0;
    bool has_n_max = false;
    std::size_t n_min = 0;
    std::string coeffs;
    std::vector<std::string> props;
    bool reverse = false;
    std::string assertion;
    std::string kind;
    bool compare = false;
    std::string tuple;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
};

/// One rendered command: the report plus its text and CSV forms.
struct Output {
    Report report;
    std::string text;
    std::optional<std::string> csv;
    std::string csv_error = "csv output is not available for this command";
    int code = kExitPass;
};

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text, std::string_view what)
{
    std::vector<Scalar> out;
    for (const auto& token : split(text, ',')) {
        if (token.empty()) throw PreconditionError("malformed " + std::string(what) + " '" + std::string(text) + "'");
        out.push_back(parse_scalar(token));
    }
    return out;
}

void load_config(Options& o, bool format_given, bool n_given, bool n_max_given)
{
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw PreconditionError("cannot read config file '" + o.config + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw PreconditionError(o.config + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
        auto as_count = [&] {
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(value, &used);
                if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
                return static_cast<std::size_t>(v);
            } catch (const std::exception&) {
                throw PreconditionError(o.config + ":" + std::to_string(lineno) + ": '" + key + "' needs a count");
            }
        };
        if (key == "format") {
            if (value != "text" && value != "json" && value != "csv")
                throw PreconditionError(o.config + ":" + std::to_string(lineno) + ": unknown format '" + value + "'");
            if (!format_given) o.format = value;
        } else if (key == "n") {
            const auto v = as_count();
            if (!n_given) o.n = v, o.has_n = true;
        } else if (key == "n-max" || key == "n_max") {
            const auto v = as_count();
            if (!n_max_given) o.n_max = v, o.has_n_max = true;
        } else {
            throw PreconditionError(o.config + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
}

FamilySpec family_from(const Options& o)
{
    const auto kind = parse_family_name(o.family);
    if (!kind) throw PreconditionError("unknown family '" + o.family + "'");
    FamilySpec spec{*kind, {}};
    for (const auto& [name, raw] : o.params) spec.params[name] = parse_scalar(raw);
    validate(spec);
    return spec;
}

std::size_t need_n(const Options& o)
{
    if (!o.has_n) throw PreconditionError("--n is required");
    return o.n;
}

Json params_json(const FamilySpec& spec)
{
    Json j = Json::object();
    for (const auto& name : required_params(spec.kind)) j[name] = scalar_json(spec.param(name));
    return j;
}

std::string params_text(const FamilySpec& spec)
{
    std::string out;
    for (const auto& name : required_params(spec.kind))
        out += (out.empty() ? "" : ", ") + name + "=" + to_string(spec.param(name));
    return out;
}

std::string params_flags(const FamilySpec& spec)
{
    std::string out;
    for (const auto& name : required_params(spec.kind)) out += " --" + name + " " + to_string(spec.param(name));
    return out;
}

std::string coeff_list(const Poly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& c : p.coeffs()) out += (out.empty() ? "" : ",") + to_string(c);
    return out;
}

std::string gamma_text(const GammaVector& g)
{
    std::string out = "[";
    for (std::size_t i = 0; i < g.entries.size(); ++i) out += (i ? ", " : "") + to_string(g.entries[i]);
    return out + "]";
}

std::optional<std::string> polys_csv(const std::vector<std::pair<std::string, Poly>>& rows, std::string_view label)
{
    std::size_t width = 1;
    for (const auto& [key, p] : rows) {
        if (!p.all_integer()) return std::nullopt;
        width = std::max(width, p.size());
    }
    std::string out(label);
    for (std::size_t i = 0; i < width; ++i) out += ",c" + std::to_string(i);
    out += "\n";
    for (const auto& [key, p] : rows) {
        out += key;
        for (std::size_t i = 0; i < width; ++i) out += "," + to_string(p.coeff(i));
        out += "\n";
    }
    return out;
}

constexpr std::string_view kIntegerCsvOnly = "csv output needs integer coefficients; use --format json or text";

// gen ------------------------------------------------------------------------

Output cmd_gen(const Options& o)
{
    const FamilySpec spec = family_from(o);
    const std::size_t n = need_n(o);
    const auto polys = generate(spec, n);

    Output out;
    out.report.command = "gen";
    out.report.inputs["family"] = family_name(spec.kind);
    out.report.inputs["params"] = params_json(spec);
    out.report.inputs["n"] = n;
    std::ostringstream text;
    text << family_name(spec.kind) << " (" << params_text(spec) << ")\n";
    std::vector<std::pair<std::string, Poly>> rows;
    for (std::size_t i = 0; i <= n; ++i) {
        out.report.results.push_back({{"n", i}, {"coefficients", poly_json(polys[i])}});
        text << "n=" << i << ": " << polys[i].to_string() << "\n";
        rows.emplace_back(std::to_string(i), polys[i]);
    }
    out.text = text.str();
    out.csv = polys_csv(rows, "n");
    out.csv_error = kIntegerCsvOnly;
    return out;
}

// check ----------------------------------------------------------------------

std::vector<Property> parse_props(const std::vector<std::string>& raw)
{
    if (raw.empty()) return {kAllProperties.begin(), kAllProperties.end()};
    std::vector<Property> out;
    for (const auto& group : raw)
        for (const auto& name : split(group, ',')) {
            const auto p = parse_property_name(name);
            if (!p) throw PreconditionError("unknown property '" + name + "'");
            out.push_back(*p);
        }
    return out;
}

Output cmd_check(const Options& o)
{
    Output out;
    out.report.command = "check";
    Poly poly;
    std::string replay_source;
    if (!o.coeffs.empty()) {
        if (!o.family.empty()) throw PreconditionError("give either --coeffs or --family, not both");
        if (!o.params.empty()) throw PreconditionError("family parameters need --family");
        poly = Poly(parse_scalar_list(o.coeffs, "coefficient list"));
        out.report.inputs["coefficients"] = poly_json(poly);
        replay_source = "--coeffs " + coeff_list(poly);
    } else if (!o.family.empty()) {
        const FamilySpec spec = family_from(o);
        const std::size_t n = need_n(o);
        poly = generate(spec, n)[n];
        out.report.inputs["family"] = family_name(spec.kind);
        out.report.inputs["params"] = params_json(spec);
        out.report.inputs["n"] = n;
        replay_source = "--family " + std::string(family_name(spec.kind)) + params_flags(spec) + " --n " + std::to_string(n);
    } else {
        throw PreconditionError("check needs --coeffs or --family");
    }
    const auto props = parse_props(o.props);
    out.report.inputs["reverse"] = o.reverse;
    Json prop_names = Json::array();
    for (auto p : props) prop_names.push_back(property_name(p));
    out.report.inputs["properties"] = prop_names;

    const Poly target = o.reverse && !poly.is_zero() ? reverse(poly, poly.degree().value()) : poly;
    std::ostringstream text;
    text << "polynomial: " << target.to_string() << "\n";
    Json checks = Json::array();
    std::string csv = "property,verdict,required,lhs,rhs\n";
    bool all_hold = true;
    for (Property prop : props) {
        const PropertyReport r = check_property(prop, target);
        Json j = property_json(r);
        text << property_name(prop) << ": " << verdict_name(r.verdict) << "\n";
        if (r.alpha) text << "  alpha = " << gamma_text(*r.alpha) << "\n";
        if (r.beta) text << "  beta = " << gamma_text(*r.beta) << "\n";
        if (r.modes) {
            text << "  modes =";
            for (auto m : *r.modes) text << " " << m;
            text << "\n";
        }
        if (r.bounds) text << "  bounds = [" << to_string(r.bounds->first) << ", " << to_string(r.bounds->second) << "]\n";
        if (!r.reason.empty()) text << "  reason: " << r.reason << "\n";
        if (r.witness)
            text << "  required: " << r.witness->inequality() << "  (" << to_string(r.witness->lhs) << " vs "
                 << to_string(r.witness->rhs) << ")\n";
        csv += std::string(property_name(prop)) + "," + std::string(verdict_name(r.verdict)) + "," +
               (r.witness ? r.witness->inequality() : "") + "," + (r.witness ? to_string(r.witness->lhs) : "") + "," +
               (r.witness ? to_string(r.witness->rhs) : "") + "\n";
        if (!r.holds()) {
            all_hold = false;
            const std::string replay = "eulerpoly check " + replay_source + " --props " +
                                       std::string(property_name(prop)) + (o.reverse ? " --reverse" : "");
            j["replay"] = replay;
            text << "  replay: " << replay << "\n";
        }
        checks.push_back(std::move(j));
    }
    out.report.results.push_back({{"coefficients", poly_json(target)}, {"checks", std::move(checks)}});
    out.report.status = all_hold ? Status::pass : Status::fail;
    out.code = all_hold ? kExitPass : kExitFail;
    text << "status: " << status_name(out.report.status) << "\n";
    out.text = text.str();
    if (target.all_integer()) out.csv = csv;
    out.csv_error = kIntegerCsvOnly;
    return out;
}

// sweep ----------------------------------------------------------------------

std::vector<Claim> claims_for_assertion(const std::string& name)
{
    if (name == "theorem1") return {Claim::theorem1_bigamma, Claim::theorem1_ratio_reciprocal};
    if (auto c = parse_claim_name(name)) return {*c};
    throw PreconditionError("unknown assertion '" + name + "'");
}

std::string violation_replay(const Violation& v)
{
    return "eulerpoly check --family " + std::string(family_name(v.cell.kind)) + params_flags(v.cell) + " --n " +
           std::to_string(v.n) + " --props " + std::string(property_name(v.property)) + (v.reciprocal ? " --reverse" : "");
}

Output cmd_sweep(const Options& o)
{
    Output out;
    out.report.command = "sweep";
    out.report.inputs["assert"] = o.assertion;
    SweepOutcome outcome;
    if (o.assertion == "corollaries") {
        if (!o.family.empty() || !o.params.empty() || o.has_n_max)
            throw PreconditionError("--assert corollaries runs a fixed grid and takes no family, ranges or --n-max");
        outcome = corollary_suite();
    } else {
        SweepPlan plan;
        plan.claims = claims_for_assertion(o.assertion);
        std::string family = o.family;
        if (family.empty()) family = o.assertion.starts_with("hcd") ? "hcd" : "general";
        const auto kind = parse_family_name(family);
        if (!kind) throw PreconditionError("unknown family '" + family + "'");
        plan.family = *kind;
        Json ranges = Json::object();
        for (const auto& [name, raw] : o.params) {
            plan.ranges[name] = parse_range(raw);
            ranges[name] = raw;
        }
        if (!o.has_n_max) throw PreconditionError("--n-max is required");
        plan.n_max = o.n_max;
        plan.n_min = o.n_min;
        if (plan.n_min > plan.n_max) throw PreconditionError("--n-min exceeds --n-max");
        validate(plan);
        out.report.inputs["family"] = family_name(plan.family);
        out.report.inputs["ranges"] = ranges;
        out.report.inputs["n_min"] = plan.n_min;
        out.report.inputs["n_max"] = plan.n_max;
        outcome = run_sweep(plan);
    }

    std::ostringstream text;
    text << "cells checked: " << outcome.cells_checked << "\n"
         << "cells outside hypothesis: " << outcome.cells_skipped << "\n"
         << "polynomials checked: " << outcome.polynomials_checked << "\n"
         << "violations: " << outcome.violations.size() << "\n";
    std::string csv = "family,params,n,claim,property,reciprocal,required,lhs,rhs\n";
    Json violations = Json::array();
    for (const auto& v : outcome.violations) {
        Json j;
        j["family"] = family_name(v.cell.kind);
        j["params"] = params_json(v.cell);
        j["n"] = v.n;
        j["claim"] = claim_name(v.claim);
        j["property"] = property_name(v.property);
        j["reciprocal"] = v.reciprocal;
        j["detail"] = v.detail;
        if (v.witness) j["witness"] = witness_json(*v.witness);
        j["replay"] = violation_replay(v);
        violations.push_back(std::move(j));
        text << "  " << family_name(v.cell.kind) << " (" << params_text(v.cell) << ") n=" << v.n << " "
             << claim_name(v.claim) << ": " << property_name(v.property) << (v.reciprocal ? " (reciprocal)" : "")
             << " " << v.detail << "\n";
        if (v.witness) text << "    required: " << v.witness->inequality() << "\n";
        text << "    replay: " << violation_replay(v) << "\n";
        csv += std::string(family_name(v.cell.kind)) + "," + params_text(v.cell) + "," + std::to_string(v.n) + "," +
               std::string(claim_name(v.claim)) + "," + std::string(property_name(v.property)) + "," +
               (v.reciprocal ? "true" : "false") + "," + (v.witness ? v.witness->inequality() : "") + "," +
               (v.witness ? to_string(v.witness->lhs) : "") + "," + (v.witness ? to_string(v.witness->rhs) : "") + "\n";
    }
    out.report.results.push_back({{"cells_checked", outcome.cells_checked},
                                  {"cells_skipped", outcome.cells_skipped},
                                  {"polynomials_checked", outcome.polynomials_checked},
                                  {"violations", std::move(violations)}});
    out.report.status = outcome.passed() ? Status::pass : Status::fail;
    out.code = outcome.passed() ? kExitPass : kExitFail;
    text << "status: " << status_name(out.report.status) << "\n";
    out.text = text.str();
    out.csv = csv;
    return out;
}

// oracle ---------------------------------------------------------------------

struct Comparison {
    std::string label;
    Poly expected;
    Poly actual;
};

void attach_comparisons(Output& out, std::ostringstream& text, Json& result, const std::vector<Comparison>& cmps)
{
    Json list = Json::array();
    bool all_equal = true;
    for (const auto& c : cmps) {
        const bool equal = c.expected == c.actual;
        all_equal = all_equal && equal;
        Json j{{"at", c.label}, {"equal", equal}, {"oracle", poly_json(c.actual)}, {"recurrence", poly_json(c.expected)}};
        list.push_back(std::move(j));
        text << "compare " << c.label << ": " << (equal ? "equal" : "MISMATCH") << "\n";
        if (!equal) text << "  oracle:     " << c.actual.to_string() << "\n  recurrence: " << c.expected.to_string() << "\n";
    }
    result["comparisons"] = std::move(list);
    if (!all_equal) {
        out.report.status = Status::fail;
        out.code = kExitFail;
    }
}

// n + 1 distinct rational points determine a polynomial identity of degree n in q.
std::vector<Scalar> comparison_points(std::size_t degree)
{
    std::vector<Scalar> pts;
    for (std::size_t j = 1; j <= degree + 1; ++j) pts.push_back(make_scalar(static_cast<long>(j), 2));
    return pts;
}

std::string bipoly_text(const BiPoly& b)
{
    std::string out;
    for (std::size_t i = 0; i < b.x_size(); ++i) out += "x^" + std::to_string(i) + ": " + b.x_coefficient(i).to_string("q") + "\n";
    return out;
}

std::string bipoly_csv(const BiPoly& b)
{
    std::string out = "x_power";
    for (std::size_t j = 0; j < b.q_size(); ++j) out += ",q" + std::to_string(j);
    out += "\n";
    for (std::size_t i = 0; i < b.x_size(); ++i) {
        out += std::to_string(i);
        for (std::size_t j = 0; j < b.q_size(); ++j) out += "," + to_string(b.at(i, j));
        out += "\n";
    }
    return out;
}

int as_small(std::size_t n) { return n > 1000 ? 1000 : static_cast<int>(n); }

Output oracle_bivariate(const Options& o, FamilyKind family)
{
    const std::size_t n = need_n(o);
    const BiPoly table = family == FamilyKind::q_eulerian ? qeulerian_bruteforce(as_small(n)) : typeb_bruteforce(as_small(n));
    Output out;
    std::ostringstream text;
    text << bipoly_text(table);
    Json result{{"table", bipoly_json(table)}};
    if (o.params.count("q")) {
        const Scalar q = parse_scalar(o.params.at("q"));
        result["at_q"] = {{"q", scalar_json(q)}, {"coefficients", poly_json(table.substitute_q(q))}};
        text << "q=" << to_string(q) << ": " << table.substitute_q(q).to_string() << "\n";
    }
    if (o.compare) {
        std::vector<Comparison> cmps;
        for (const auto& q : comparison_points(n)) {
            const FamilySpec spec{family, {{"q", q}}};
            cmps.push_back({"q=" + to_string(q), generate(spec, n)[n], table.substitute_q(q)});
        }
        attach_comparisons(out, text, result, cmps);
    }
    out.report.results.push_back(std::move(result));
    out.text = text.str();
    out.csv = bipoly_csv(table);
    return out;
}

Output oracle_bigdesc(const Options& o)
{
    const std::size_t m = need_n(o);
    const Poly p = big_descent_bruteforce(as_small(m));
    Output out;
    std::ostringstream text;
    text << "big descents over S_" << m << ": " << p.to_string() << "\n";
    Json result{{"coefficients", poly_json(p)}};
    if (o.compare) {
        const FamilySpec spec{FamilyKind::q_eulerian, {{"q", Scalar(2)}}};
        attach_comparisons(out, text, result, {{"q-eulerian q=2 n=" + std::to_string(m - 1), generate(spec, m - 1)[m - 1], p}});
    }
    out.report.results.push_back(std::move(result));
    out.text = text.str();
    out.csv = polys_csv({{std::to_string(m), p}}, "m");
    return out;
}

Output oracle_onek(const Options& o)
{
    const std::size_t n = need_n(o);
    if (!o.params.count("k")) throw PreconditionError("--kind onek needs --k");
    const Scalar k = parse_scalar(o.params.at("k"));
    const Poly p = one_over_k_bruteforce(k, as_small(n));
    Output out;
    std::ostringstream text;
    text << "k=" << to_string(k) << " n=" << n << ": " << p.to_string() << "\n";
    Json result{{"coefficients", poly_json(p)}};
    if (o.compare) {
        const FamilySpec spec{FamilyKind::one_over_k, {{"k", k}}};
        attach_comparisons(out, text, result, {{"k=" + to_string(k), generate(spec, n)[n], p}});
    }
    out.report.results.push_back(std::move(result));
    out.text = text.str();
    out.csv = polys_csv({{std::to_string(n), p}}, "n");
    out.csv_error = kIntegerCsvOnly;
    return out;
}

Output oracle_egf(const Options& o)
{
    if (o.family.empty()) throw PreconditionError("--kind egf needs --family");
    const FamilySpec spec = family_from(o);
    const std::size_t n = need_n(o);
    const auto series = egf_coefficients(spec, n);
    Output out;
    std::ostringstream text;
    Json result{{"family", family_name(spec.kind)}, {"params", params_json(spec)}};
    Json polys = Json::array();
    std::vector<std::pair<std::string, Poly>> rows;
    for (std::size_t i = 0; i <= n; ++i) {
        polys.push_back(poly_json(series[i]));
        text << "n=" << i << ": " << series[i].to_string() << "\n";
        rows.emplace_back(std::to_string(i), series[i]);
    }
    result["coefficients"] = std::move(polys);
    if (o.compare) {
        const auto rec = generate(spec, n);
        std::vector<Comparison> cmps;
        for (std::size_t i = 0; i <= n; ++i) cmps.push_back({"n=" + std::to_string(i), rec[i], series[i]});
        attach_comparisons(out, text, result, cmps);
    }
    out.report.results.push_back(std::move(result));
    out.text = text.str();
    out.csv = polys_csv(rows, "n");
    out.csv_error = kIntegerCsvOnly;
    return out;
}

Output oracle_lemma2(const Options& o)
{
    Output out;
    std::ostringstream text;
    if (!o.tuple.empty()) {
        const auto v = parse_scalar_list(o.tuple, "tuple");
        if (v.size() != 10) throw PreconditionError("--tuple needs a1,...,a6,l1,l2,l,mu (10 values)");
        Lemma2Input in;
        std::copy(v.begin(), v.begin() + 6, in.a.begin());
        in.l1 = v[6];
        in.l2 = v[7];
        in.l = v[8];
        in.mu = v[9];
        const Lemma2Outcome r = lemma2_check(in);
        Json result{{"sum_bound", r.sum_bound},
                    {"weighted_step", r.weighted_step},
                    {"weighted_to_tail", r.weighted_to_tail},
                    {"tail_to_gap", r.tail_to_gap},
                    {"conclusion", r.conclusion},
                    {"conclusion_lhs", scalar_json(r.conclusion_lhs)},
                    {"conclusion_rhs", scalar_json(r.conclusion_rhs)}};
        out.report.results.push_back(result);
        for (const auto& [key, value] : result.items()) text << key << ": " << (value.is_boolean() ? (value.get<bool>() ? "holds" : "fails") : value.get<std::string>()) << "\n";
        if (!r.all_hold()) out.report.status = Status::fail, out.code = kExitFail;
        out.csv = "step,holds\nsum_bound," + std::to_string(r.sum_bound) + "\nweighted_step," +
                  std::to_string(r.weighted_step) + "\nweighted_to_tail," + std::to_string(r.weighted_to_tail) +
                  "\ntail_to_gap," + std::to_string(r.tail_to_gap) + "\nconclusion," + std::to_string(r.conclusion) + "\n";
    } else {
        const Lemma2Campaign c = lemma2_random_campaign(o.samples, o.seed);
        out.report.results.push_back({{"accepted", c.accepted}, {"attempted", c.attempted}, {"failures", c.failures}});
        text << "samples accepted: " << c.accepted << " of " << c.attempted << " drawn\nfailures: " << c.failures << "\n";
        if (c.failures) out.report.status = Status::fail, out.code = kExitFail;
        out.csv = "accepted,attempted,failures\n" + std::to_string(c.accepted) + "," + std::to_string(c.attempted) + "," +
                  std::to_string(c.failures) + "\n";
    }
    out.text = text.str();
    return out;
}

Output cmd_oracle(const Options& o)
{
    Output out;
    if (o.kind == "qeulerian") out = oracle_bivariate(o, FamilyKind::q_eulerian);
    else if (o.kind == "typeb") out = oracle_bivariate(o, FamilyKind::type_b_q);
    else if (o.kind == "bigdesc") out = oracle_bigdesc(o);
    else if (o.kind == "onek") out = oracle_onek(o);
    else if (o.kind == "egf") out = oracle_egf(o);
    else if (o.kind == "lemma2") out = oracle_lemma2(o);
    else throw PreconditionError("unknown oracle kind '" + o.kind + "'");
    out.report.command = "oracle";
    out.report.inputs["kind"] = o.kind;
    if (o.has_n) out.report.inputs["n"] = o.n;
    if (!o.family.empty()) out.report.inputs["family"] = o.family;
    Json params = Json::object();
    for (const auto& [name, raw] : o.params) params[name] = raw;
    out.report.inputs["params"] = params;
    out.report.inputs["compare"] = o.compare;
    if (o.kind == "lemma2") {
        if (!o.tuple.empty()) out.report.inputs["tuple"] = o.tuple;
        else out.report.inputs["samples"] = o.samples, out.report.inputs["seed"] = o.seed;
    }
    out.text += std::string("status: ") + std::string(status_name(out.report.status)) + "\n";
    return out;
}

// driver ---------------------------------------------------------------------

void write_atomically(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw PreconditionError("cannot write '" + tmp.string() + "'");
        f << content;
        if (!f.flush()) throw PreconditionError("cannot write '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw PreconditionError("cannot replace '" + path + "': " + ec.message());
    }
}

struct Registered {
    CLI::App* app;
    CLI::Option* format;
    CLI::Option* n;
    CLI::Option* n_max;
    std::vector<std::pair<std::string, CLI::Option*>> params;
    std::map<std::string, std::string> raw;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact generation and property certification of Eulerian-type polynomials", "eulerpoly"};
    app.require_subcommand(1);

    std::map<std::string, Registered> subs;
    auto add_common = [&](const std::string& name, const std::string& help, bool with_params) -> Registered& {
        CLI::App* sub = app.add_subcommand(name, help);
        Registered& r = subs[name];
        r.app = sub;
        r.format = sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", o.out_file, "write the report to FILE instead of stdout");
        sub->add_option("--config", o.config, "key=value defaults file (format, n, n-max)");
        if (with_params)
            for (const char* p : kParamNames)
                r.params.emplace_back(p, sub->add_option(std::string("--") + p, r.raw[p], std::string("parameter ") + p));
        return r;
    };

    auto& gen = add_common("gen", "generate a family at positions 0..n", true);
    gen.app->add_option("--family", o.family, "family name")->required();
    gen.n = gen.app->add_option("--n", o.n, "largest position");

    auto& check = add_common("check", "certify properties of one polynomial", true);
    check.app->add_option("--coeffs", o.coeffs, "comma-separated rational coefficients, constant term first");
    check.app->add_option("--family", o.family, "family name");
    check.n = check.app->add_option("--n", o.n, "family position");
    check.app->add_option("--props", o.props, "comma-separated properties (default: all)")->delimiter(' ');
    check.app->add_flag("--reverse", o.reverse, "check x^deg p(1/x) instead of p");

    auto& sweep = add_common("sweep", "verify a claim over a parameter grid", true);
    sweep.app->add_option("--assert", o.assertion, "theorem1, statement-ii, hcd-forward, hcd-reverse, real-rooted, "
                                                   "darroch-modes, bigamma-fails or corollaries")
        ->required();
    sweep.app->add_option("--family", o.family, "family name (default general, or hcd for hcd-* claims)");
    sweep.n_max = sweep.app->add_option("--n-max", o.n_max, "largest position");
    sweep.app->add_option("--n-min", o.n_min, "smallest position");

    auto& oracle = add_common("oracle", "brute-force and generating-function oracles", true);
    oracle.app->add_option("--kind", o.kind, "qeulerian, typeb, bigdesc, onek, egf or lemma2")->required();
    oracle.n = oracle.app->add_option("--n", o.n, "size (permutation length, or series order for egf)");
    oracle.app->add_flag("--compare", o.compare, "assert equality with the recurrence");
    oracle.app->add_option("--family", o.family, "family for --kind egf");
    oracle.app->add_option("--tuple", o.tuple, "lemma2: a1,...,a6,l1,l2,l,mu");
    oracle.app->add_option("--samples", o.samples, "lemma2: random samples");
    oracle.app->add_option("--seed", o.seed, "lemma2: generator seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (auto& [name, r] : subs)
            if (r.app->parsed()) {
                out << r.app->help();
                return kExitPass;
            }
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string command;
    for (auto& [name, r] : subs)
        if (r.app->parsed()) command = name;
    Registered& reg = subs.at(command);
    for (const auto& [name, opt] : reg.params)
        if (opt->count()) o.params[name] = reg.raw[name];

    Output result;
    try {
        load_config(o, reg.format->count() > 0, reg.n && reg.n->count() > 0, reg.n_max && reg.n_max->count() > 0);
        if (reg.n && reg.n->count()) o.has_n = true;
        if (reg.n_max && reg.n_max->count()) o.has_n_max = true;
        if (command == "gen") result = cmd_gen(o);
        else if (command == "check") result = cmd_check(o);
        else if (command == "sweep") result = cmd_sweep(o);
        else result = cmd_oracle(o);
        if (o.format == "csv" && !result.csv) throw PreconditionError(result.csv_error);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (o.format == "json") {
            Report r;
            r.command = command;
            r.status = Status::error;
            r.results.push_back({{"error", e.what()}});
            out << serialize(r);
        }
        return kExitUsage;
    }

    const std::string rendered = o.format == "json" ? serialize(result.report) : o.format == "csv" ? *result.csv : result.text;
    try {
        if (o.out_file.empty()) out << rendered;
        else write_atomically(o.out_file, rendered);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return result.code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace eulerpoly
