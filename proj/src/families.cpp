#include "eulerpoly/families.hpp"

#include <algorithm>
#include <utility>

namespace eulerpoly {

namespace {

struct FamilyInfo {
    FamilyKind kind;
    std::string_view name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table()
{
    static const std::vector<FamilyInfo> table = {
        {FamilyKind::general_abc, "general", {"a", "b", "c"}},
        {FamilyKind::hcd_pqr, "hcd", {"p", "q", "r"}},
        {FamilyKind::q_eulerian, "q-eulerian", {"q"}},
        {FamilyKind::li_shanlan, "li-shanlan", {"q"}},
        {FamilyKind::one_over_k, "one-over-k", {"k"}},
        {FamilyKind::type_b_q, "type-b", {"q"}},
        {FamilyKind::r_colored, "r-colored", {"r"}},
        {FamilyKind::carlitz_scoville, "carlitz-scoville", {"p", "q"}},
    };
    return table;
}

const FamilyInfo& info(FamilyKind kind)
{
    for (const auto& f : family_table())
        if (f.kind == kind) return f;
    throw PreconditionError("unknown family kind");
}

// x (1 - x) p'(x)
Poly x_one_minus_x_derivative(const Poly& p)
{
    static const Poly x_minus_x2{0, 1, -1};
    return x_minus_x2 * derivative(p);
}

} // namespace

const Scalar& FamilySpec::param(const std::string& name) const
{
    auto it = params.find(name);
    if (it == params.end())
        throw PreconditionError("family '" + std::string(family_name(kind)) + "' is missing parameter '" + name + "'");
    return it->second;
}

std::string_view family_name(FamilyKind kind) { return info(kind).name; }

std::optional<FamilyKind> parse_family_name(std::string_view name)
{
    std::string canon(name);
    std::replace(canon.begin(), canon.end(), '_', '-');
    for (const auto& f : family_table())
        if (f.name == canon) return f.kind;
    // enum-style aliases
    if (canon == "general-abc") return FamilyKind::general_abc;
    if (canon == "hcd-pqr") return FamilyKind::hcd_pqr;
    if (canon == "type-b-q") return FamilyKind::type_b_q;
    return std::nullopt;
}

std::vector<std::string> required_params(FamilyKind kind) { return info(kind).params; }

void validate(const FamilySpec& spec)
{
    const auto required = required_params(spec.kind);
    for (const auto& name : required) {
        const Scalar& v = spec.param(name);
        if (v < 0) throw PreconditionError("parameter '" + name + "' must be nonnegative, got " + to_string(v));
    }
    for (const auto& [name, value] : spec.params)
        if (std::find(required.begin(), required.end(), name) == required.end())
            throw PreconditionError("family '" + std::string(family_name(spec.kind)) + "' does not take parameter '" +
                                    name + "'");
}

FamilyMapping mapping_for(const FamilySpec& spec)
{
    validate(spec);
    switch (spec.kind) {
    case FamilyKind::general_abc:
        return {spec.param("a"), spec.param("b"), spec.param("c")};
    case FamilyKind::hcd_pqr: {
        const Scalar& p = spec.param("p");
        const Scalar& q = spec.param("q");
        const Scalar& r = spec.param("r");
        return {q, q * r - p, p};
    }
    case FamilyKind::q_eulerian:
        return {1, 1, spec.param("q"), spec.param("q"), 1};
    case FamilyKind::li_shanlan:
        return {1, spec.param("q"), 1, spec.param("q"), 0};
    case FamilyKind::one_over_k:
        return {spec.param("k"), spec.param("k"), 1, 1, 1};
    case FamilyKind::type_b_q:
        return {1 + spec.param("q"), spec.param("q"), 1};
    case FamilyKind::r_colored:
        return {spec.param("r"), spec.param("r") - 1, 1};
    case FamilyKind::carlitz_scoville:
        return {1, spec.param("p"), spec.param("q")};
    }
    throw PreconditionError("unknown family kind");
}

bool mapping_has_negative_b(const FamilySpec& spec) { return mapping_for(spec).b < 0; }

Poly step_general(const Scalar& a, const Scalar& b, const Scalar& c, const Poly& f, std::size_t n)
{
    if (f.degree() > n)
        throw PreconditionError("step_general: f has degree " + to_string(f.degree()) + " > n = " + std::to_string(n));
    std::vector<Scalar> next(n + 2);
    for (std::size_t i = 0; i <= n + 1; ++i) {
        Scalar v = (a * static_cast<unsigned long>(i) + c) * f.coeff(i);
        if (i > 0) v += (a * static_cast<unsigned long>(n + 1 - i) + b) * f.coeff(i - 1);
        next[i] = std::move(v);
    }
    return Poly(std::move(next));
}

std::vector<Poly> generate_abc(const Scalar& a, const Scalar& b, const Scalar& c, std::size_t n_max)
{
    std::vector<Poly> out;
    out.reserve(n_max + 1);
    out.push_back(Poly::constant(1));
    for (std::size_t n = 0; n < n_max; ++n) out.push_back(step_general(a, b, c, out.back(), n));
    return out;
}

std::vector<Poly> generate(const FamilySpec& spec, std::size_t n_max)
{
    const FamilyMapping m = mapping_for(spec);
    std::vector<Poly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n < m.shift && n <= n_max; ++n) out.push_back(Poly::constant(1));
    if (n_max < m.shift) return out;
    for (auto& f : generate_abc(m.a, m.b, m.c, n_max - m.shift)) out.push_back(m.scale * f);
    return out;
}

SymDecomp sym_decomp(const Poly& f)
{
    if (f.is_zero()) return {};
    return sym_decomp(f, f.degree().value());
}

SymDecomp sym_decomp(const Poly& f, std::size_t n)
{
    const Poly rev = reverse(f, n);
    // Both numerators vanish at x = 1; div_one_minus_x throws if that ever fails.
    Poly a_part = div_one_minus_x(f - rev.shifted(1));
    Poly b_part = div_one_minus_x(rev - f);
    return {std::move(a_part), std::move(b_part), n};
}

std::vector<SymDecomp> sym_decomp_recurrence(const Scalar& a, const Scalar& b, const Scalar& c, std::size_t n_max)
{
    std::vector<SymDecomp> out;
    out.reserve(n_max + 1);
    out.push_back({Poly::constant(1), Poly{}, 0});
    const Poly x{0, 1};
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto& [an, bn, center] = out.back();
        const Scalar nn = static_cast<unsigned long>(n);
        const Poly a_factor{c, a * nn + c};
        const Poly b_factor{b, a * nn - a + b};
        Poly a_next = a_factor * an + a * x_one_minus_x_derivative(an) + (a - b + c) * bn.shifted(1);
        Poly b_next = b_factor * bn + a * x_one_minus_x_derivative(bn) + (b - c) * an;
        out.push_back({std::move(a_next), std::move(b_next), n + 1});
    }
    return out;
}

std::vector<GammaPair> gamma_recurrence(const Scalar& a, const Scalar& b, const Scalar& c, std::size_t n_max)
{
    std::vector<GammaPair> out;
    out.reserve(n_max + 1);
    out.push_back({GammaVector{{Scalar(1)}, 0}, GammaVector{{}, -1}});
    auto at = [](const std::vector<Scalar>& v, long k) { return k >= 0 && static_cast<std::size_t>(k) < v.size() ? v[k] : Scalar(0); };
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto& alpha = out.back().alpha.entries;
        const auto& beta = out.back().beta.entries;
        const long nn = static_cast<long>(n);
        GammaVector next_alpha{std::vector<Scalar>(gamma_length(nn + 1)), nn + 1};
        GammaVector next_beta{std::vector<Scalar>(gamma_length(nn)), nn};
        for (long k = 0; k < static_cast<long>(next_alpha.entries.size()); ++k)
            next_alpha.entries[k] = (a * k + c) * at(alpha, k) + 2 * a * (nn - 2 * k + 2) * at(alpha, k - 1) +
                                    (a - b + c) * at(beta, k - 1);
        for (long k = 0; k < static_cast<long>(next_beta.entries.size()); ++k)
            next_beta.entries[k] = (a * k + b) * at(beta, k) + 2 * a * (nn - 2 * k + 1) * at(beta, k - 1) +
                                   (b - c) * at(alpha, k);
        out.push_back({std::move(next_alpha), std::move(next_beta)});
    }
    return out;
}

} // namespace eulerpoly
