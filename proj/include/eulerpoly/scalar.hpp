#pragma once

// Exact scalars. Everything in the library is computed over GMP rationals;
// there is no floating-point path.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerpoly {

using BigInt = mpz_class;
using Scalar = mpq_class;

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "p/q" for non-integers, "p" for integers. Always lowest terms.
std::string to_string(const Scalar& s);
std::string to_string(const BigInt& z);

/// Accepts "3", "-3", "3/4", "-3/4". Throws PreconditionError on anything else
/// (including a zero denominator).
Scalar parse_scalar(std::string_view text);

inline bool is_integer(const Scalar& s) { return s.get_den() == 1; }

inline BigInt floor_of(const Scalar& s)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return q;
}

inline BigInt ceil_of(const Scalar& s)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return q;
}

inline Scalar make_scalar(long num, long den = 1)
{
    if (den == 0) throw PreconditionError("zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

inline int sign_of(const Scalar& s) { return sgn(s); }

} // namespace eulerpoly
