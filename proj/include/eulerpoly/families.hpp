#pragma once

#include "eulerpoly/gamma.hpp"
#include "eulerpoly/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eulerpoly {

/// Polynomial families generated by the Eulerian-type step
///   f_{n+1}(x) = (a n x + b x + c) f_n(x) + a x (1 - x) f_n'(x),  f_0 = 1.
enum class FamilyKind {
    general_abc,
    hcd_pqr,
    q_eulerian,
    li_shanlan,
    one_over_k,
    type_b_q,
    r_colored,
    carlitz_scoville,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::general_abc;
    std::map<std::string, Scalar> params;

    /// Value of a required parameter; throws PreconditionError when absent.
    const Scalar& param(const std::string& name) const;

    bool operator==(const FamilySpec&) const = default;
};

/// Canonical CLI name ("q-eulerian", ...) and back. Underscore spellings are
/// accepted on input.
std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family_name(std::string_view name);

/// Parameter names a kind requires, in display order.
std::vector<std::string> required_params(FamilyKind kind);

/// Throws PreconditionError unless params has exactly the required names and
/// all of them are nonnegative.
void validate(const FamilySpec& spec);

/// How a family reduces to the (a,b,c) step. Position n of the family is
///   n <  shift : 1
///   n >= shift : scale * f_{n - shift}(a, b, c)
struct FamilyMapping {
    Scalar a, b, c;
    Scalar scale = 1;
    std::size_t shift = 0;
};

/// The mapping table:
///   general_abc      (a, b, c)
///   hcd_pqr          (q, q r - p, p)
///   q_eulerian       (1, 1, q), scale q, shift 1       A_n(x,q), A_0 = 1
///   li_shanlan       (1, q, 1), scale q                L_n = x^n A_{n+1}(1/x, q)
///   one_over_k       (k, k, 1), shift 1                A_n^{(k)}, A_0 = 1
///   type_b_q         (1 + q, q, 1)
///   r_colored        (r, r - 1, 1)
///   carlitz_scoville (1, p, q)
/// hcd_pqr with q r < p yields b < 0; the generator accepts it and
/// mapping_has_negative_b reports it.
FamilyMapping mapping_for(const FamilySpec& spec);
bool mapping_has_negative_b(const FamilySpec& spec);

/// One step of the recurrence from f = f_n to f_{n+1}, computed coefficientwise:
///   f_{n+1,i} = (a i + c) f_{n,i} + (a (n - i) + a + b) f_{n,i-1}.
Poly step_general(const Scalar& a, const Scalar& b, const Scalar& c, const Poly& f, std::size_t n);

/// f_0 .. f_{n_max} for the plain (a,b,c) recurrence.
std::vector<Poly> generate_abc(const Scalar& a, const Scalar& b, const Scalar& c, std::size_t n_max);

/// Positions 0 .. n_max of the family, indexed as the family itself is indexed.
std::vector<Poly> generate(const FamilySpec& spec, std::size_t n_max);

/// f = a_part + x * b_part with both parts palindromic: a_part about
/// center_degree, b_part about center_degree - 1.
struct SymDecomp {
    Poly a_part;
    Poly b_part;
    std::size_t center_degree = 0;

    bool operator==(const SymDecomp&) const = default;
};

/// Symmetric decomposition at the polynomial's own degree (center 0 for the
/// zero polynomial, which decomposes as (0, 0)).
SymDecomp sym_decomp(const Poly& f);
/// Symmetric decomposition about an explicit center n >= degree(f).
SymDecomp sym_decomp(const Poly& f, std::size_t n);

/// (a_n, b_n) for n = 0..n_max from the coupled recurrence system
///   a_{n+1} = (a n x + c + c x) a_n + a x (1 - x) a_n' + (a - b + c) x b_n
///   b_{n+1} = (a n x - a x + b x + b) b_n + a x (1 - x) b_n' + (b - c) a_n
/// starting from a_0 = 1, b_0 = 0.
std::vector<SymDecomp> sym_decomp_recurrence(const Scalar& a, const Scalar& b, const Scalar& c, std::size_t n_max);

struct GammaPair {
    GammaVector alpha;
    GammaVector beta;

    bool operator==(const GammaPair&) const = default;
};

/// alpha_{n,k}, beta_{n,k} for n = 0..n_max:
///   alpha_{n+1,k} = (a k + c) alpha_{n,k} + 2a (n - 2k + 2) alpha_{n,k-1} + (a - b + c) beta_{n,k-1}
///   beta_{n+1,k}  = (a k + b) beta_{n,k}  + 2a (n - 2k + 1) beta_{n,k-1}  + (b - c) alpha_{n,k}
/// Alpha at index n has floor(n/2)+1 entries, beta floor((n-1)/2)+1 (none at n = 0).
std::vector<GammaPair> gamma_recurrence(const Scalar& a, const Scalar& b, const Scalar& c, std::size_t n_max);

} // namespace eulerpoly
