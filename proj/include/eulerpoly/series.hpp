#pragma once

#include "eulerpoly/families.hpp"
#include "eulerpoly/poly.hpp"

#include <cstddef>
#include <vector>

namespace eulerpoly {

/// Power series in z truncated after z^order, with coefficients in Q[x].
/// All operations are exact modulo z^{order+1}.
class SeriesZ {
public:
    explicit SeriesZ(std::size_t order);
    SeriesZ(std::size_t order, std::vector<Poly> coeffs);

    /// exp(c z) for a polynomial c in x.
    static SeriesZ exp_linear(const Poly& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Poly& operator[](std::size_t j) const { return coeffs_.at(j); }
    Poly& operator[](std::size_t j) { return coeffs_.at(j); }

    friend SeriesZ operator+(const SeriesZ& s, const SeriesZ& t);
    friend SeriesZ operator*(const SeriesZ& s, const SeriesZ& t);
    friend SeriesZ operator*(const Scalar& k, const SeriesZ& s);

    /// Requires a zero constant term.
    SeriesZ exp() const;
    /// Requires constant term 1.
    SeriesZ log() const;
    /// exp(r log s); requires constant term 1.
    SeriesZ pow(const Scalar& r) const;

    /// Every z-coefficient divided exactly by (1 - x); throws PreconditionError
    /// if some coefficient is not divisible.
    SeriesZ div_one_minus_x() const;

    bool operator==(const SeriesZ&) const = default;

private:
    std::vector<Poly> coeffs_;
};

/// n! [z^n] of the family's closed-form exponential generating function, for
/// n = 0..order. Supported kinds:
///   hcd_pqr     e^{p(1-x)z} ((1-x) / (1 - x e^{q(1-x)z}))^r
///   q_eulerian  ((1-x) / (e^{z(x-1)} - x))^q
///   one_over_k  ((1-x) / (e^{kz(x-1)} - x))^{1/k}
/// Each base is normalized by its z^0 value (1 - x) before the power is taken,
/// which keeps every coefficient a polynomial in x.
std::vector<Poly> egf_coefficients(const FamilySpec& spec, std::size_t order);

} // namespace eulerpoly
