#include "eulerpoly/sweeps.hpp"

#include "eulerpoly/parallel.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace eulerpoly {

namespace {

struct ClaimInfo {
    Claim claim;
    std::string_view name;
    std::string_view alias;
};

constexpr std::array<ClaimInfo, 8> kClaims{{
    {Claim::theorem1_bigamma, "theorem1_bigamma", "theorem1-bigamma"},
    {Claim::theorem1_ratio_reciprocal, "theorem1_ratio_reciprocal", "theorem1-ratio"},
    {Claim::statement_ii_ratio, "statement_ii_ratio", "statement-ii"},
    {Claim::corollary_hcd_forward, "corollary_hcd_forward", "hcd-forward"},
    {Claim::corollary_hcd_reverse, "corollary_hcd_reverse", "hcd-reverse"},
    {Claim::real_rooted, "real_rooted", "real-rooted"},
    {Claim::darroch_modes, "darroch_modes", "darroch-modes"},
    {Claim::bigamma_fails_expected, "bigamma_fails_expected", "bigamma-fails"},
}};

// A single property check inside a claim.
struct Check {
    Property property;
    bool reciprocal;
    bool expect_holds;
};

std::vector<Check> checks_for(Claim claim)
{
    switch (claim) {
    case Claim::theorem1_bigamma: return {{Property::bi_gamma, false, true}};
    case Claim::theorem1_ratio_reciprocal: return {{Property::ratio_monotone, true, true}};
    case Claim::statement_ii_ratio: return {{Property::ratio_monotone, false, true}};
    case Claim::corollary_hcd_forward:
        return {{Property::bi_gamma, false, true}, {Property::ratio_monotone, true, true}};
    case Claim::corollary_hcd_reverse: return {{Property::ratio_monotone, false, true}};
    case Claim::real_rooted: return {{Property::real_rooted, false, true}};
    case Claim::darroch_modes: return {{Property::darroch, false, true}};
    case Claim::bigamma_fails_expected: return {{Property::bi_gamma, false, false}};
    }
    return {};
}

Poly reciprocal_of(const Poly& p) { return p.is_zero() ? p : reverse(p, p.degree().value()); }

std::vector<std::vector<Scalar>> cartesian(const std::vector<std::vector<Scalar>>& axes)
{
    std::vector<std::vector<Scalar>> out{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<Scalar>> next;
        for (const auto& prefix : out)
            for (const auto& v : axis) {
                next.push_back(prefix);
                next.back().push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

// Alpha/beta from the gamma recurrence, scaled to the family position, when
// the position's symmetric decomposition is centered where the recurrence is.
std::optional<std::string> gamma_route_mismatch(const FamilyMapping& m, std::size_t n, const Poly& p,
                                                const PropertyReport& report, const std::vector<GammaPair>& rec)
{
    if (n < m.shift || p.is_zero()) return std::nullopt;
    const std::size_t j = n - m.shift;
    if (p.degree() != j) return std::nullopt;
    GammaVector alpha = rec[j].alpha, beta = rec[j].beta;
    for (auto& g : alpha.entries) g *= m.scale;
    for (auto& g : beta.entries) g *= m.scale;
    if (report.alpha && *report.alpha == alpha && report.beta && *report.beta == beta) return std::nullopt;
    return std::string("gamma recurrence and sym_decomp+gamma_vector disagree");
}

SweepOutcome run_cell(const SweepPlan& plan, const FamilySpec& cell)
{
    SweepOutcome out;
    std::vector<Claim> active;
    for (Claim c : plan.claims)
        if (!plan.filter_by_hypothesis || claim_hypothesis(c, cell)) active.push_back(c);
    if (active.empty()) {
        out.cells_skipped = 1;
        return out;
    }
    out.cells_checked = 1;
    const FamilyMapping m = mapping_for(cell);
    const auto polys = generate(cell, plan.n_max);
    std::vector<GammaPair> rec;
    if (std::find(active.begin(), active.end(), Claim::theorem1_bigamma) != active.end() && plan.n_max >= m.shift)
        rec = gamma_recurrence(m.a, m.b, m.c, plan.n_max - m.shift);

    for (Claim claim : active) {
        const std::size_t first = std::max(plan.n_min, claim_min_index(claim));
        for (std::size_t n = first; n <= plan.n_max; ++n) {
            const Poly& p = polys[n];
            if (claim == Claim::darroch_modes && !sturm_real_nonpositive(p).holds()) continue;
            ++out.polynomials_checked;
            for (const Check& chk : checks_for(claim)) {
                const Poly target = chk.reciprocal ? reciprocal_of(p) : p;
                const PropertyReport r = check_property(chk.property, target);
                auto violation = [&](std::string detail) {
                    out.violations.push_back({cell, n, claim, chk.property, chk.reciprocal, r.witness, std::move(detail)});
                };
                if (chk.expect_holds && !r.holds())
                    violation(std::string(verdict_name(r.verdict)) + (r.reason.empty() ? "" : ": " + r.reason));
                else if (!chk.expect_holds && r.holds())
                    violation("property holds where failure was expected");
                if (claim == Claim::theorem1_bigamma && !rec.empty())
                    if (auto mismatch = gamma_route_mismatch(m, n, p, r, rec)) violation(*mismatch);
            }
        }
    }
    return out;
}

} // namespace

std::string_view claim_name(Claim c)
{
    for (const auto& info : kClaims)
        if (info.claim == c) return info.name;
    return "unknown";
}

std::optional<Claim> parse_claim_name(std::string_view name)
{
    for (const auto& info : kClaims)
        if (info.name == name || info.alias == name) return info.claim;
    return std::nullopt;
}

std::size_t claim_min_index(Claim c) { return c == Claim::bigamma_fails_expected ? 4 : 1; }

std::vector<Scalar> ParamRange::values() const
{
    std::vector<Scalar> out;
    for (Scalar v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

ParamRange parse_range(std::string_view text)
{
    ParamRange r;
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_scalar(text);
        return r;
    }
    r.lo = parse_scalar(text.substr(0, dots));
    std::string_view rest = text.substr(dots + 2);
    const auto colon = rest.find(':');
    r.hi = parse_scalar(rest.substr(0, colon));
    if (colon != std::string_view::npos) r.step = parse_scalar(rest.substr(colon + 1));
    if (r.step <= 0) throw PreconditionError("range '" + std::string(text) + "' needs a positive step");
    if (r.hi < r.lo) throw PreconditionError("range '" + std::string(text) + "' is empty");
    return r;
}

void validate(const SweepPlan& plan)
{
    const auto names = required_params(plan.family);
    for (const auto& name : names) {
        auto it = plan.ranges.find(name);
        if (it == plan.ranges.end())
            throw PreconditionError("sweep over '" + std::string(family_name(plan.family)) + "' needs a range for '" +
                                    name + "'");
        if (it->second.step <= 0) throw PreconditionError("range for '" + name + "' needs a positive step");
        if (it->second.hi < it->second.lo) throw PreconditionError("range for '" + name + "' is empty");
        if (it->second.lo < 0) throw PreconditionError("range for '" + name + "' must be nonnegative");
    }
    for (const auto& [name, range] : plan.ranges)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw PreconditionError("family '" + std::string(family_name(plan.family)) + "' does not take '" + name + "'");
    if (plan.claims.empty()) throw PreconditionError("sweep plan has no claims");
}

SweepOutcome& SweepOutcome::operator+=(const SweepOutcome& other)
{
    cells_checked += other.cells_checked;
    cells_skipped += other.cells_skipped;
    polynomials_checked += other.polynomials_checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    return *this;
}

bool claim_hypothesis(Claim claim, const FamilySpec& cell)
{
    const FamilyMapping m = mapping_for(cell);
    const Scalar &a = m.a, &b = m.b, &c = m.c;
    switch (claim) {
    case Claim::theorem1_bigamma:
    case Claim::theorem1_ratio_reciprocal: return a + c >= b && b >= c && c > 0;
    case Claim::statement_ii_ratio: return a + b >= c && c >= b && b > 0;
    case Claim::corollary_hcd_forward:
    case Claim::corollary_hcd_reverse: {
        if (cell.kind != FamilyKind::hcd_pqr) return false;
        const Scalar &p = cell.param("p"), &q = cell.param("q"), &r = cell.param("r");
        if (claim == Claim::corollary_hcd_forward) return q + 2 * p >= q * r && q * r >= 2 * p && p > 0;
        return q * (1 + r) >= 2 * p && 2 * p >= q * r && q * r > p;
    }
    case Claim::real_rooted:
    case Claim::darroch_modes: return b >= 0 && b + c > 0;
    case Claim::bigamma_fails_expected: return true;
    }
    return false;
}

SweepOutcome run_sweep(const SweepPlan& plan)
{
    validate(plan);
    const auto names = required_params(plan.family);
    std::vector<std::vector<Scalar>> axes;
    for (const auto& name : names) axes.push_back(plan.ranges.at(name).values());
    const auto tuples = cartesian(axes);

    std::vector<SweepOutcome> parts(tuples.size());
    parallel_for(tuples.size(), [&](std::size_t i) {
        FamilySpec cell{plan.family, {}};
        for (std::size_t k = 0; k < names.size(); ++k) cell.params[names[k]] = tuples[i][k];
        parts[i] = run_cell(plan, cell);
    });
    SweepOutcome total;
    for (const auto& part : parts) total += part;
    sort_violations(total.violations);
    return total;
}

SweepOutcome corollary_suite()
{
    auto set = [](std::initializer_list<Scalar> values) {
        std::vector<Scalar> v(values);
        return v;
    };
    struct Entry {
        FamilyKind family;
        std::map<std::string, std::vector<Scalar>> grid;
        std::size_t n_max;
        std::vector<Claim> claims;
        bool filtered;
    };
    const Scalar quarter(1, 4), half(1, 2), three_quarters(3, 4), three_halves(3, 2);
    const std::vector<Entry> entries = {
        {FamilyKind::q_eulerian, {{"q", set({quarter, half, three_quarters, 1})}}, 15,
         {Claim::theorem1_bigamma, Claim::theorem1_ratio_reciprocal}, false},
        {FamilyKind::q_eulerian, {{"q", set({1, three_halves, 2})}}, 15, {Claim::statement_ii_ratio}, false},
        {FamilyKind::one_over_k, {{"k", set({1, 2, 3, 4})}}, 12,
         {Claim::theorem1_bigamma, Claim::theorem1_ratio_reciprocal}, false},
        {FamilyKind::type_b_q, {{"q", set({1, 2, 3})}}, 10,
         {Claim::theorem1_bigamma, Claim::theorem1_ratio_reciprocal}, false},
        {FamilyKind::type_b_q, {{"q", set({quarter, half, 1})}}, 10, {Claim::statement_ii_ratio}, false},
        {FamilyKind::r_colored, {{"r", set({2, 3, 4})}}, 12, {Claim::theorem1_ratio_reciprocal}, false},
        {FamilyKind::r_colored, {{"r", set({1, three_halves, 2})}}, 12, {Claim::statement_ii_ratio}, false},
        {FamilyKind::carlitz_scoville,
         {{"p", set({half, 1, three_halves, 2})}, {"q", set({half, 1, three_halves, 2})}},
         12,
         {Claim::theorem1_bigamma, Claim::theorem1_ratio_reciprocal, Claim::statement_ii_ratio},
         true},
        {FamilyKind::hcd_pqr,
         {{"p", set({half, 1, 2})}, {"q", set({half, 1, 2})}, {"r", set({half, 1, three_halves, 2, 3})}},
         10,
         {Claim::corollary_hcd_forward, Claim::corollary_hcd_reverse},
         true},
    };

    SweepOutcome total;
    for (const auto& e : entries) {
        std::vector<std::string> names;
        std::vector<std::vector<Scalar>> axes;
        for (const auto& [name, values] : e.grid) {
            names.push_back(name);
            axes.push_back(values);
        }
        SweepPlan plan{e.family, {}, e.n_max, 0, e.claims, e.filtered};
        const auto tuples = cartesian(axes);
        std::vector<SweepOutcome> parts(tuples.size());
        parallel_for(tuples.size(), [&](std::size_t i) {
            FamilySpec cell{e.family, {}};
            for (std::size_t k = 0; k < names.size(); ++k) cell.params[names[k]] = tuples[i][k];
            parts[i] = run_cell(plan, cell);
        });
        for (const auto& part : parts) total += part;
    }
    sort_violations(total.violations);
    return total;
}

void sort_violations(std::vector<Violation>& v)
{
    auto key = [](const Violation& x) {
        std::vector<Scalar> params;
        for (const auto& name : required_params(x.cell.kind)) params.push_back(x.cell.param(name));
        return std::make_tuple(static_cast<int>(x.cell.kind), params, x.n, static_cast<int>(x.claim),
                               static_cast<int>(x.property), x.reciprocal);
    };
    std::stable_sort(v.begin(), v.end(), [&](const Violation& l, const Violation& r) { return key(l) < key(r); });
}

} // namespace eulerpoly
