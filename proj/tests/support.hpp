#pragma once

#include "eulerpoly/poly.hpp"

#include <doctest.h>

#include <initializer_list>
#include <ostream>
#include <random>

namespace eulerpoly {

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

} // namespace eulerpoly

namespace testing {

using eulerpoly::Poly;
using eulerpoly::Scalar;

inline Poly P(std::initializer_list<long> coeffs)
{
    std::vector<Scalar> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

inline Scalar Q(long num, long den = 1) { return eulerpoly::make_scalar(num, den); }

/// Seeded positive rationals num/den with num in [1, max_num], den in [1, max_den].
class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed, long max_num = 9, long max_den = 5)
        : rng_(seed), num_(1, max_num), den_(1, max_den)
    {
    }

    Scalar positive() { return eulerpoly::make_scalar(num_(rng_), den_(rng_)); }
    Scalar nonnegative() { return positive() - 1; }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> num_, den_;
};

/// (a n x + b x + c) f + a x (1 - x) f', computed with whole-polynomial
/// operations rather than the coefficient formula.
inline Poly step_by_operators(const Scalar& a, const Scalar& b, const Scalar& c, const Poly& f, std::size_t n)
{
    const Scalar nn = static_cast<unsigned long>(n);
    const Poly lin{c, a * nn + b};
    const Poly x_one_minus_x{0, 1, -1};
    return lin * f + a * (x_one_minus_x * eulerpoly::derivative(f));
}

} // namespace testing
