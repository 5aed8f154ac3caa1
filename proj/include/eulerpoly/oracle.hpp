#pragma once

// Brute-force enumeration oracles. These count permutation statistics
// directly and share no code path with the recurrences they validate.

#include "eulerpoly/poly.hpp"

#include <cstddef>
#include <vector>

namespace eulerpoly {

inline constexpr int kMaxSymmetricN = 9;
inline constexpr int kMaxHyperoctahedralN = 7;

/// Dense bivariate integer polynomial, coeffs[i][j] is the coefficient of x^i q^j.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(std::size_t x_size, std::size_t q_size);

    const BigInt& at(std::size_t x_pow, std::size_t q_pow) const;
    BigInt& at(std::size_t x_pow, std::size_t q_pow);

    std::size_t x_size() const { return coeffs_.size(); }
    std::size_t q_size() const { return coeffs_.empty() ? 0 : coeffs_.front().size(); }

    /// Polynomial in x obtained by setting q to t.
    Poly substitute_q(const Scalar& t) const;
    /// Coefficient of x^i as a polynomial in q.
    Poly x_coefficient(std::size_t x_pow) const;
    BigInt total() const;

    bool operator==(const BiPoly&) const = default;

private:
    std::vector<std::vector<BigInt>> coeffs_;
};

/// A_n(x,q) = sum over S_n of x^exc q^cyc. Requires 1 <= n <= 9.
BiPoly qeulerian_bruteforce(int n);

/// B_n(x,q) = sum over signed permutations of x^des_B q^neg, with des_B taken
/// over (0, pi(1), ..., pi(n)). Requires 1 <= n <= 7.
BiPoly typeb_bruteforce(int n);

/// Big-descent distribution over S_m (pi(i) >= pi(i+1) + 2). Requires 2 <= m <= 9.
Poly big_descent_bruteforce(int m);

/// Ordinary descent distribution over S_n. Requires 1 <= n <= 9.
Poly descent_bruteforce(int n);

/// sum over S_n of x^exc k^{n - cyc}. Requires 1 <= n <= 9 and k > 0.
Poly one_over_k_bruteforce(const Scalar& k, int n);

} // namespace eulerpoly
