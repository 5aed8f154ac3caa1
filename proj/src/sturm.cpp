#include "eulerpoly/analysis.hpp"

namespace eulerpoly {

namespace {

int sign_at_neg_infinity(const Poly& p)
{
    const int s = sgn(p.leading());
    return p.degree().value() % 2 == 0 ? s : -s;
}

std::size_t sign_variations(const std::vector<int>& signs)
{
    std::size_t count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// p with its x^m factor removed, together with m.
std::pair<Poly, std::size_t> strip_zero_roots(const Poly& p)
{
    std::size_t m = 0;
    while (p.coeff(m) == 0) ++m;
    std::vector<Scalar> v(p.coeffs().begin() + static_cast<std::ptrdiff_t>(m), p.coeffs().end());
    return {Poly(std::move(v)), m};
}

} // namespace

std::vector<Poly> sturm_chain(const Poly& p)
{
    if (p.is_zero()) throw PreconditionError("sturm_chain: zero polynomial");
    std::vector<Poly> chain{primitive_part(p)};
    Poly next = primitive_part(derivative(p));
    while (!next.is_zero()) {
        chain.push_back(next);
        const auto& prev = chain[chain.size() - 2];
        // primitive_part scales by a positive rational, so signs survive.
        next = primitive_part(-divmod(prev, chain.back()).remainder);
    }
    return chain;
}

std::size_t count_real_nonpositive_roots(const Poly& p)
{
    if (p.is_zero()) throw PreconditionError("count_real_nonpositive_roots: zero polynomial");
    const auto [q, zero_mult] = strip_zero_roots(p);
    // q(0) != 0, so V(-inf) - V(0) counts the distinct roots of q in (-inf, 0).
    const auto chain = sturm_chain(q);
    std::vector<int> at_neg_inf, at_zero;
    for (const auto& s : chain) {
        at_neg_inf.push_back(sign_at_neg_infinity(s));
        at_zero.push_back(sgn(s.coeff(0)));
    }
    const std::size_t negative = sign_variations(at_neg_inf) - sign_variations(at_zero);
    return negative + (zero_mult > 0 ? 1 : 0);
}

Poly squarefree_part(const Poly& p)
{
    if (p.is_zero()) throw PreconditionError("squarefree_part: zero polynomial");
    return primitive_part(divmod(p, poly_gcd(p, derivative(p))).quotient);
}

PropertyReport sturm_real_nonpositive(const Poly& p)
{
    PropertyReport r{Property::real_rooted};
    if (p.is_zero()) {
        r.verdict = Verdict::not_applicable;
        r.reason = "zero polynomial";
        return r;
    }
    const std::size_t distinct = squarefree_part(p).degree().value();
    const std::size_t found = count_real_nonpositive_roots(p);
    r.verdict = found == distinct ? Verdict::holds : Verdict::fails;
    r.reason = std::to_string(found) + " of " + std::to_string(distinct) + " distinct roots are real and nonpositive";
    if (!r.holds()) {
        Witness w{WitnessSource::values};
        w.lhs = static_cast<unsigned long>(distinct);
        w.rhs = static_cast<unsigned long>(found);
        w.note = "distinct roots vs real nonpositive roots";
        r.witness = std::move(w);
    }
    return r;
}

} // namespace eulerpoly
