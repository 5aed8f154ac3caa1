#include "eulerpoly/poly.hpp"

#include <algorithm>
#include <utility>

namespace eulerpoly {

std::string to_string(Degree d)
{
    return d.is_neg_infinity() ? std::string("-inf") : std::to_string(d.value());
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, std::size_t power)
{
    std::vector<Scalar> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

Poly Poly::one_plus_x_pow(std::size_t k)
{
    std::vector<Scalar> v(k + 1);
    BigInt binom = 1;
    for (std::size_t i = 0; i <= k; ++i) {
        v[i] = binom;
        binom = binom * static_cast<unsigned long>(k - i) / static_cast<unsigned long>(i + 1);
    }
    return Poly(std::move(v));
}

void Poly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Poly::degree() const
{
    return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
}

Scalar Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

Scalar Poly::leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

Poly Poly::operator-() const
{
    std::vector<Scalar> v(coeffs_);
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly operator+(const Poly& p, const Poly& q)
{
    std::vector<Scalar> v(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.coeffs_[i];
    for (std::size_t i = 0; i < q.size(); ++i) v[i] += q.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q)
{
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Scalar> v(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Scalar& s, const Poly& p)
{
    std::vector<Scalar> v(p.coeffs_);
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& q) { return *this = *this + q; }
Poly& Poly::operator-=(const Poly& q) { return *this = *this - q; }

Poly Poly::shifted(std::size_t k) const
{
    if (is_zero()) return {};
    std::vector<Scalar> v(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly(std::move(v));
}

bool Poly::all_nonnegative() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c >= 0; });
}

bool Poly::all_positive() const
{
    return !coeffs_.empty() && std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c > 0; });
}

bool Poly::is_palindromic(std::size_t center) const
{
    if (degree() > center) return false;
    for (std::size_t i = 0; 2 * i < center; ++i)
        if (coeff(i) != coeff(center - i)) return false;
    return true;
}

bool Poly::all_integer() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return is_integer(c); });
}

std::string Poly::to_string(std::string_view var) const
{
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Scalar& c = coeffs_[i];
        if (c == 0) continue;
        Scalar mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (i == 0) {
            out += eulerpoly::to_string(mag);
            continue;
        }
        if (mag != 1) out += eulerpoly::to_string(mag) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

Poly derivative(const Poly& p)
{
    if (p.size() <= 1) return {};
    std::vector<Scalar> v(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p.coeff(i) * static_cast<unsigned long>(i);
    return Poly(std::move(v));
}

Poly reverse(const Poly& p, std::size_t n)
{
    if (p.degree() > n)
        throw PreconditionError("reverse: n=" + std::to_string(n) + " is below degree " + to_string(p.degree()));
    std::vector<Scalar> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = p.coeff(n - i);
    return Poly(std::move(v));
}

Poly div_one_minus_x(const Poly& p)
{
    // (1 - x) q = p  <=>  q_i = p_0 + ... + p_i, and the full sum p(1) must vanish.
    if (p.is_zero()) return {};
    std::vector<Scalar> v(p.size());
    Scalar acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p.coeff(i);
        v[i] = acc;
    }
    if (acc != 0) throw PreconditionError("div_one_minus_x: p(1) = " + to_string(acc) + ", division is not exact");
    return Poly(std::move(v));
}

Scalar eval(const Poly& p, const Scalar& t)
{
    Scalar acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p.coeff(i);
    return acc;
}

DivMod divmod(const Poly& p, const Poly& d)
{
    if (d.is_zero()) throw PreconditionError("divmod: division by the zero polynomial");
    if (p.degree() < d.degree()) return {Poly{}, p};
    const std::size_t dd = d.degree().value();
    std::vector<Scalar> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<Scalar> quot(rem.size() - dd);
    const Scalar lead = d.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Scalar factor = rem[k + dd] / lead;
        quot[k] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= factor * d.coeff(j);
    }
    rem.resize(dd);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly primitive_part(const Poly& p)
{
    if (p.is_zero()) return {};
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Scalar scale(den_lcm, num_gcd);
    scale.canonicalize();
    return scale * p;
}

Poly poly_gcd(const Poly& p, const Poly& q)
{
    Poly a = primitive_part(p), b = primitive_part(q);
    while (!b.is_zero()) {
        Poly r = primitive_part(divmod(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return a;
}

Poly pow(const Poly& p, std::size_t k)
{
    Poly result = Poly::constant(1), base = p;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

} // namespace eulerpoly
