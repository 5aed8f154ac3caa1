#include "eulerpoly/analysis.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace eulerpoly {

namespace {

struct PropertyInfo {
    Property property;
    std::string_view name;
    std::string_view alias;
};

constexpr std::array<PropertyInfo, 9> kProperties{{
    {Property::unimodal, "unimodal", "unimodal"},
    {Property::log_concave, "log-concave", "logconcave"},
    {Property::spiral, "spiral", "spiral"},
    {Property::alternatingly_increasing, "alt-increasing", "alternatingly-increasing"},
    {Property::ratio_monotone, "ratio", "ratio-monotone"},
    {Property::gamma_positive, "gamma", "gamma-positive"},
    {Property::bi_gamma, "bigamma", "bi-gamma"},
    {Property::darroch, "darroch", "darroch-modes"},
    {Property::real_rooted, "real-rooted", "sturm"},
}};

PropertyReport make_report(Property prop) { return PropertyReport{prop}; }

PropertyReport not_applicable(Property prop, std::string reason)
{
    PropertyReport r = make_report(prop);
    r.verdict = Verdict::not_applicable;
    r.reason = std::move(reason);
    return r;
}

// Shared precondition of the coefficient-chain properties.
std::optional<PropertyReport> require_nonnegative(Property prop, const Poly& p)
{
    if (p.is_zero()) return not_applicable(prop, "zero polynomial");
    if (!p.all_nonnegative()) return not_applicable(prop, "negative coefficient");
    return std::nullopt;
}

Scalar product_of(const std::vector<Scalar>& seq, const std::vector<std::size_t>& idx, const Scalar& factor)
{
    Scalar out = factor;
    for (auto i : idx) out *= i < seq.size() ? seq[i] : Scalar(0);
    return out;
}

std::vector<Scalar> coeff_vector(const Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Checks lhs <= rhs over coefficients; returns a witness if violated.
std::optional<Witness> cross_check(const std::vector<Scalar>& seq, std::vector<std::size_t> lhs_idx,
                                   std::vector<std::size_t> rhs_idx, std::string note,
                                   WitnessSource source = WitnessSource::coefficients)
{
    Witness w{source, std::move(lhs_idx), std::move(rhs_idx)};
    w.lhs = product_of(seq, w.lhs_indices, w.lhs_factor);
    w.rhs = product_of(seq, w.rhs_indices, w.rhs_factor);
    if (w.lhs <= w.rhs) return std::nullopt;
    w.note = std::move(note);
    return w;
}

PropertyReport from_witness(Property prop, std::optional<Witness> w)
{
    PropertyReport r = make_report(prop);
    r.verdict = w ? Verdict::fails : Verdict::holds;
    r.witness = std::move(w);
    return r;
}

std::vector<std::size_t> interleaved_order(std::size_t n, bool start_high)
{
    std::vector<std::size_t> order;
    order.reserve(n + 1);
    std::size_t lo = 0, hi = n;
    bool take_high = start_high;
    while (lo <= hi) {
        if (take_high) {
            order.push_back(hi);
            if (hi == 0) break;
            --hi;
        } else {
            order.push_back(lo++);
        }
        take_high = !take_high;
    }
    return order;
}

PropertyReport chain_property(Property prop, const Poly& p, bool start_high)
{
    if (auto na = require_nonnegative(prop, p)) return *na;
    const auto seq = coeff_vector(p);
    const auto order = interleaved_order(p.degree().value(), start_high);
    for (std::size_t t = 0; t + 1 < order.size(); ++t)
        if (auto w = cross_check(seq, {order[t]}, {order[t + 1]}, "link " + std::to_string(t)))
            return from_witness(prop, std::move(w));
    return from_witness(prop, std::nullopt);
}

std::vector<std::size_t> mode_indices(const Poly& p)
{
    const auto coeffs = p.coeffs();
    const Scalar peak = *std::max_element(coeffs.begin(), coeffs.end());
    std::vector<std::size_t> modes;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] == peak) modes.push_back(i);
    return modes;
}

std::optional<Witness> first_negative(const GammaVector& g, WitnessSource source)
{
    for (std::size_t k = 0; k < g.entries.size(); ++k) {
        Witness w{source, {}, {k}, 0, 1};
        w.lhs = 0;
        w.rhs = g.entries[k];
        if (w.lhs > w.rhs) {
            w.note = std::string(witness_source_name(source)) + "[" + std::to_string(k) + "] is negative";
            return w;
        }
    }
    return std::nullopt;
}

} // namespace

std::string_view property_name(Property p)
{
    for (const auto& info : kProperties)
        if (info.property == p) return info.name;
    return "unknown";
}

std::optional<Property> parse_property_name(std::string_view name)
{
    std::string canon(name);
    std::replace(canon.begin(), canon.end(), '_', '-');
    for (const auto& info : kProperties)
        if (info.name == canon || info.alias == canon) return info.property;
    return std::nullopt;
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "unknown";
}

std::string_view witness_source_name(WitnessSource s)
{
    switch (s) {
    case WitnessSource::coefficients: return "a";
    case WitnessSource::alpha: return "alpha";
    case WitnessSource::beta: return "beta";
    case WitnessSource::values: return "value";
    }
    return "unknown";
}

std::string Witness::inequality() const
{
    if (source == WitnessSource::values) return to_string(lhs) + " <= " + to_string(rhs);
    const std::string seq(witness_source_name(source));
    auto side = [&](const std::vector<std::size_t>& idx, const Scalar& factor) {
        std::string s;
        if (factor != 1 || idx.empty()) s = to_string(factor);
        for (auto i : idx) {
            if (!s.empty()) s += "*";
            s += seq + "[" + std::to_string(i) + "]";
        }
        return s;
    };
    return side(lhs_indices, lhs_factor) + " <= " + side(rhs_indices, rhs_factor);
}

PropertyReport unimodal(const Poly& p)
{
    if (auto na = require_nonnegative(Property::unimodal, p)) return *na;
    const auto seq = coeff_vector(p);
    PropertyReport r = make_report(Property::unimodal);
    r.modes = mode_indices(p);
    std::optional<std::size_t> descent;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!descent && seq[i] > seq[i + 1]) descent = i;
        if (descent && seq[i] < seq[i + 1]) {
            // Valley at i: required min(a_l, a_r) <= a_i with l the descent
            // start and r = i + 1. Recorded by value since min is not a product.
            Witness w{WitnessSource::values, {*descent, i + 1}, {i}};
            w.lhs = std::min(seq[*descent], seq[i + 1]);
            w.rhs = seq[i];
            w.note = "valley (" + std::to_string(*descent) + "," + std::to_string(i) + "," + std::to_string(i + 1) + ")";
            r.verdict = Verdict::fails;
            r.witness = std::move(w);
            return r;
        }
    }
    r.verdict = Verdict::holds;
    return r;
}

PropertyReport log_concave(const Poly& p)
{
    if (auto na = require_nonnegative(Property::log_concave, p)) return *na;
    const auto seq = coeff_vector(p);
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        if (auto w = cross_check(seq, {i - 1, i + 1}, {i, i}, "i=" + std::to_string(i)))
            return from_witness(Property::log_concave, std::move(w));
    return from_witness(Property::log_concave, std::nullopt);
}

PropertyReport spiral(const Poly& p) { return chain_property(Property::spiral, p, true); }

PropertyReport alternatingly_increasing(const Poly& p)
{
    return chain_property(Property::alternatingly_increasing, p, false);
}

PropertyReport ratio_monotone(const Poly& p)
{
    if (p.is_zero()) return not_applicable(Property::ratio_monotone, "zero polynomial");
    if (!p.all_positive())
        return not_applicable(Property::ratio_monotone, "coefficients must be strictly positive");
    const auto seq = coeff_vector(p);
    const long n = static_cast<long>(p.degree().value());
    auto u = [](long v) { return static_cast<std::size_t>(v); };
    // floor((n-1)/2) with n = 0 giving -1
    const long m1 = n == 0 ? -1 : (n - 1) / 2;
    for (long i = 0; i < m1; ++i)
        if (auto w = cross_check(seq, {u(n - i), u(i + 1)}, {u(n - i - 1), u(i)}, "chain 1 link " + std::to_string(i)))
            return from_witness(Property::ratio_monotone, std::move(w));
    if (m1 >= 0)
        if (auto w = cross_check(seq, {u(n - m1)}, {u(m1)}, "chain 1 terminal"))
            return from_witness(Property::ratio_monotone, std::move(w));
    const long m2 = n / 2;
    for (long j = 0; j + 1 < m2; ++j)
        if (auto w = cross_check(seq, {u(j), u(n - 2 - j)}, {u(j + 1), u(n - 1 - j)}, "chain 2 link " + std::to_string(j)))
            return from_witness(Property::ratio_monotone, std::move(w));
    if (m2 >= 1)
        if (auto w = cross_check(seq, {u(m2 - 1)}, {u(n - m2)}, "chain 2 terminal"))
            return from_witness(Property::ratio_monotone, std::move(w));
    return from_witness(Property::ratio_monotone, std::nullopt);
}

PropertyReport gamma_positive(const Poly& p)
{
    const long center = p.is_zero() ? 0 : static_cast<long>(p.degree().value());
    if (!p.is_palindromic(static_cast<std::size_t>(center)))
        return not_applicable(Property::gamma_positive, "not palindromic");
    PropertyReport r = from_witness(Property::gamma_positive, std::nullopt);
    r.alpha = gamma_vector(p, center);
    r.witness = first_negative(*r.alpha, WitnessSource::alpha);
    r.verdict = r.witness ? Verdict::fails : Verdict::holds;
    return r;
}

PropertyReport bi_gamma(const Poly& p)
{
    const SymDecomp d = sym_decomp(p);
    const long n = static_cast<long>(d.center_degree);
    PropertyReport r = make_report(Property::bi_gamma);
    r.alpha = gamma_vector(d.a_part, n);
    r.beta = gamma_vector(d.b_part, n - 1);
    r.witness = first_negative(*r.alpha, WitnessSource::alpha);
    if (!r.witness) r.witness = first_negative(*r.beta, WitnessSource::beta);
    r.verdict = r.witness ? Verdict::fails : Verdict::holds;
    return r;
}

std::pair<BigInt, BigInt> darroch_bounds(const Poly& p)
{
    if (p.is_zero()) throw PreconditionError("darroch_bounds: zero polynomial");
    if (!p.all_nonnegative()) throw PreconditionError("darroch_bounds: negative coefficient");
    const Scalar mean = eval(derivative(p), 1) / eval(p, 1);
    return {floor_of(mean), ceil_of(mean)};
}

PropertyReport darroch_modes(const Poly& p)
{
    if (auto na = require_nonnegative(Property::darroch, p)) return *na;
    PropertyReport r = make_report(Property::darroch);
    r.bounds = darroch_bounds(p);
    r.modes = mode_indices(p);
    const auto& [lo, hi] = *r.bounds;
    for (auto k : *r.modes) {
        const Scalar mode = static_cast<unsigned long>(k);
        if (mode < lo || mode > hi) {
            Witness w{WitnessSource::values};
            w.lhs = mode < lo ? Scalar(lo) : mode;
            w.rhs = mode < lo ? mode : Scalar(hi);
            w.note = "mode " + std::to_string(k) + " outside [" + to_string(lo) + ", " + to_string(hi) + "]";
            r.witness = std::move(w);
            r.verdict = Verdict::fails;
            return r;
        }
    }
    r.verdict = Verdict::holds;
    return r;
}

PropertyReport check_property(Property prop, const Poly& p)
{
    switch (prop) {
    case Property::unimodal: return unimodal(p);
    case Property::log_concave: return log_concave(p);
    case Property::spiral: return spiral(p);
    case Property::alternatingly_increasing: return alternatingly_increasing(p);
    case Property::ratio_monotone: return ratio_monotone(p);
    case Property::gamma_positive: return gamma_positive(p);
    case Property::bi_gamma: return bi_gamma(p);
    case Property::darroch: return darroch_modes(p);
    case Property::real_rooted: return sturm_real_nonpositive(p);
    }
    throw PreconditionError("unknown property");
}

bool replay_witness(Property prop, const Witness& w, const Poly& p)
{
    if (w.source != WitnessSource::values) {
        std::vector<Scalar> seq;
        if (w.source == WitnessSource::coefficients) {
            seq = coeff_vector(p);
        } else {
            const SymDecomp d = sym_decomp(p);
            const long n = static_cast<long>(d.center_degree);
            seq = w.source == WitnessSource::alpha ? gamma_vector(d.a_part, n).entries
                                                   : gamma_vector(d.b_part, n - 1).entries;
        }
        const Scalar lhs = product_of(seq, w.lhs_indices, w.lhs_factor);
        const Scalar rhs = product_of(seq, w.rhs_indices, w.rhs_factor);
        if (lhs != w.lhs || rhs != w.rhs || !(lhs > rhs)) return false;
    } else if (!(w.lhs > w.rhs)) {
        return false;
    }
    const PropertyReport again = check_property(prop, p);
    return again.verdict == Verdict::fails && again.witness && *again.witness == w;
}

} // namespace eulerpoly
