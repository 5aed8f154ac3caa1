#pragma once

#include "eulerpoly/scalar.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eulerpoly {

/// Polynomial degree. The zero polynomial has degree minus infinity, which
/// compares below every finite degree.
class Degree {
public:
    constexpr Degree() = default;
    constexpr explicit Degree(std::size_t d) : value_(d) {}

    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return !value_.has_value(); }

    /// Finite value; throws std::bad_optional_access for minus infinity.
    constexpr std::size_t value() const { return value_.value(); }

    constexpr bool operator==(const Degree&) const = default;
    constexpr std::strong_ordering operator<=>(const Degree& other) const
    {
        if (is_neg_infinity() || other.is_neg_infinity())
            return !is_neg_infinity() <=> !other.is_neg_infinity();
        return *value_ <=> *other.value_;
    }
    constexpr bool operator==(std::size_t d) const { return value_ == d; }
    constexpr std::strong_ordering operator<=>(std::size_t d) const { return *this <=> Degree(d); }

private:
    std::optional<std::size_t> value_;
};

std::string to_string(Degree d);

/// Dense univariate polynomial over exact rationals, coefficients from x^0 up.
/// The zero polynomial is the empty coefficient list; no value ever carries
/// trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);
    Poly(std::initializer_list<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, std::size_t power);
    /// (1 + x)^k
    static Poly one_plus_x_pow(std::size_t k);

    Degree degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i; zero past the degree.
    Scalar coeff(std::size_t i) const;
    std::span<const Scalar> coeffs() const { return coeffs_; }
    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const { return coeffs_.size(); }
    Scalar leading() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Scalar& s, const Poly& p);
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Multiply by x^k.
    Poly shifted(std::size_t k) const;

    /// True when every coefficient is >= 0 (vacuously true for zero).
    bool all_nonnegative() const;
    /// True when the polynomial is nonzero and every coefficient up to the
    /// degree is > 0.
    bool all_positive() const;
    /// Coefficients symmetric about center/2, with degree <= center.
    bool is_palindromic(std::size_t center) const;
    bool all_integer() const;

    /// Renders as "c0 + c1*x + c2*x^2"; unit coefficients are elided.
    std::string to_string(std::string_view var = "x") const;

private:
    void normalize();

    std::vector<Scalar> coeffs_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly derivative(const Poly& p);

/// x^n * p(1/x). Throws PreconditionError when n < degree(p).
Poly reverse(const Poly& p, std::size_t n);

/// Exact quotient p / (1 - x) via prefix sums. Throws PreconditionError when
/// p(1) != 0.
Poly div_one_minus_x(const Poly& p);

Scalar eval(const Poly& p, const Scalar& t);

/// Euclidean division over the rationals: p = q*d + r with deg r < deg d.
struct DivMod {
    Poly quotient;
    Poly remainder;
};
DivMod divmod(const Poly& p, const Poly& d);

/// Scales p by a positive rational so that its coefficients are coprime
/// integers. The sign of every coefficient is preserved.
Poly primitive_part(const Poly& p);

/// Monic-free gcd; result is primitive with positive leading coefficient.
Poly poly_gcd(const Poly& p, const Poly& q);

Poly pow(const Poly& p, std::size_t k);

} // namespace eulerpoly
