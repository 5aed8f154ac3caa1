#pragma once

// Property certifiers over exact coefficient sequences. Every inequality is
// decided by cross-multiplication; nothing here divides coefficients.

#include "eulerpoly/families.hpp"
#include "eulerpoly/gamma.hpp"
#include "eulerpoly/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eulerpoly {

enum class Property {
    unimodal,
    log_concave,
    spiral,
    alternatingly_increasing,
    ratio_monotone,
    gamma_positive,
    bi_gamma,
    darroch,
    real_rooted,
};

std::string_view property_name(Property p);
std::optional<Property> parse_property_name(std::string_view name);

enum class Verdict { holds, fails, not_applicable };
std::string_view verdict_name(Verdict v);

/// Which sequence a witness indexes into. `values` witnesses carry only the
/// compared numbers (e.g. a mode against a Darroch bound).
enum class WitnessSource { coefficients, alpha, beta, values };
std::string_view witness_source_name(WitnessSource s);

/// A violated inequality
///   lhs_factor * prod(s[lhs_indices]) <= rhs_factor * prod(s[rhs_indices])
/// over the sequence s named by source.
struct Witness {
    WitnessSource source = WitnessSource::coefficients;
    std::vector<std::size_t> lhs_indices;
    std::vector<std::size_t> rhs_indices;
    Scalar lhs_factor = 1;
    Scalar rhs_factor = 1;
    Scalar lhs;
    Scalar rhs;
    std::string note;

    bool operator==(const Witness&) const = default;
    /// "a[0]*a[2] <= a[1]*a[1]" style rendering of the required inequality.
    std::string inequality() const;
};

struct PropertyReport {
    Property property = Property::unimodal;
    Verdict verdict = Verdict::not_applicable;
    std::optional<Witness> witness;
    std::optional<std::vector<std::size_t>> modes;
    std::optional<GammaVector> alpha;
    std::optional<GammaVector> beta;
    std::optional<std::pair<BigInt, BigInt>> bounds;
    std::string reason;

    bool holds() const { return verdict == Verdict::holds; }
};

PropertyReport unimodal(const Poly& p);
PropertyReport log_concave(const Poly& p);
/// a_n <= a_0 <= a_{n-1} <= a_1 <= ... <= a_{floor(n/2)}
PropertyReport spiral(const Poly& p);
/// a_0 <= a_n <= a_1 <= a_{n-1} <= ... <= a_{floor((n+1)/2)}
PropertyReport alternatingly_increasing(const Poly& p);
/// Both ratio chains, with [.] read as floor:
///   a_n/a_0 <= a_{n-1}/a_1 <= ... <= a_{n-m}/a_m <= 1,      m = floor((n-1)/2)
///   a_0/a_{n-1} <= a_1/a_{n-2} <= ... <= a_{m'-1}/a_{n-m'} <= 1,  m' = floor(n/2)
/// Requires strictly positive coefficients, otherwise not_applicable.
PropertyReport ratio_monotone(const Poly& p);
/// Gamma-positivity of a palindromic polynomial (not_applicable otherwise).
PropertyReport gamma_positive(const Poly& p);
/// sym_decomp followed by gamma_vector on both parts; alpha and beta attached.
PropertyReport bi_gamma(const Poly& p);

/// (floor(p'(1)/p(1)), ceil(p'(1)/p(1))). Throws PreconditionError for the zero
/// polynomial or a polynomial with a negative coefficient.
std::pair<BigInt, BigInt> darroch_bounds(const Poly& p);
/// Modes contained in darroch_bounds; bounds and modes attached.
PropertyReport darroch_modes(const Poly& p);

/// Holds when every root of p is real and <= 0 (Sturm chain count).
PropertyReport sturm_real_nonpositive(const Poly& p);

/// Number of distinct real roots in the half-open interval (-inf, 0].
std::size_t count_real_nonpositive_roots(const Poly& p);
/// Sturm chain p, p', -rem(...), ... with every member made primitive.
std::vector<Poly> sturm_chain(const Poly& p);
/// p / gcd(p, p').
Poly squarefree_part(const Poly& p);

PropertyReport check_property(Property prop, const Poly& p);

/// Re-evaluates a witness against p from scratch: the products named by its
/// indices are recomputed (alpha/beta via a fresh symmetric decomposition),
/// must match the recorded values, and must still violate lhs <= rhs. The
/// property is then rerun and must report the same witness.
bool replay_witness(Property prop, const Witness& w, const Poly& p);

} // namespace eulerpoly
