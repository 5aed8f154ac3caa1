#include "eulerpoly/gamma.hpp"

#include <algorithm>

namespace eulerpoly {

bool GammaVector::nonnegative() const
{
    return std::all_of(entries.begin(), entries.end(), [](const Scalar& g) { return g >= 0; });
}

Poly GammaVector::expand() const
{
    Poly out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k] == 0) continue;
        out += entries[k] * Poly::one_plus_x_pow(static_cast<std::size_t>(center_degree) - 2 * k).shifted(k);
    }
    return out;
}

GammaVector gamma_vector(const Poly& p, long center)
{
    if (center < 0) {
        if (!p.is_zero()) throw PreconditionError("gamma_vector: nonzero polynomial with negative center");
        return {{}, center};
    }
    const auto n = static_cast<std::size_t>(center);
    if (!p.is_palindromic(n))
        throw PreconditionError("gamma_vector: " + p.to_string() + " is not palindromic about degree " +
                                std::to_string(n));
    GammaVector out{std::vector<Scalar>(gamma_length(center)), center};
    Poly residual = p;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const Scalar g = residual.coeff(k);
        out.entries[k] = g;
        if (g != 0) residual -= g * Poly::one_plus_x_pow(n - 2 * k).shifted(k);
    }
    // Residual must vanish for palindromic input.
    if (!residual.is_zero()) throw PreconditionError("gamma_vector: nonzero residual " + residual.to_string());
    return out;
}

GammaVector gamma_vector(const Poly& p)
{
    if (p.is_zero()) return gamma_vector(p, 0);
    return gamma_vector(p, static_cast<long>(p.degree().value()));
}

} // namespace eulerpoly
