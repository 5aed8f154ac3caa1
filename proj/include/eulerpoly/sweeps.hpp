#pragma once

#include "eulerpoly/analysis.hpp"
#include "eulerpoly/families.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eulerpoly {

enum class Claim {
    theorem1_bigamma,           // a+c >= b >= c > 0: bi-gamma-positive, both gamma routes agree
    theorem1_ratio_reciprocal,  // a+c >= b >= c > 0: x^n f_n(1/x) ratio monotone
    statement_ii_ratio,         // a+b >= c >= b > 0: f_n ratio monotone
    corollary_hcd_forward,      // q+2p >= qr >= 2p > 0: bi-gamma and reciprocal ratio monotone
    corollary_hcd_reverse,      // q(1+r) >= 2p >= qr > 0 and qr > p: ratio monotone
    real_rooted,                // b + c > 0: only real nonpositive zeros
    darroch_modes,              // real-rooted cells: modes inside the Darroch bounds
    bigamma_fails_expected,     // every cell, n >= 4: bi-gamma must fail
};

std::string_view claim_name(Claim c);
std::optional<Claim> parse_claim_name(std::string_view name);

/// Smallest family index a claim speaks about.
std::size_t claim_min_index(Claim c);

/// Inclusive rational range lo, lo+step, ..., <= hi.
struct ParamRange {
    Scalar lo, hi, step = 1;

    std::vector<Scalar> values() const;
};

/// Parses "3", "0..5" or "0..1:1/4". Throws PreconditionError when malformed,
/// empty, or the step is not positive.
ParamRange parse_range(std::string_view text);

struct SweepPlan {
    FamilyKind family = FamilyKind::general_abc;
    std::map<std::string, ParamRange> ranges;
    std::size_t n_max = 0;
    std::size_t n_min = 0;
    std::vector<Claim> claims;
    /// When false every cell is checked; the grid itself is the hypothesis.
    bool filter_by_hypothesis = true;
};

/// Throws PreconditionError when the plan names the wrong parameters for the
/// family, has an empty range or a nonpositive step.
void validate(const SweepPlan& plan);

struct Violation {
    FamilySpec cell;
    std::size_t n = 0;
    Claim claim = Claim::theorem1_bigamma;
    Property property = Property::bi_gamma;
    /// The property was checked on x^deg p(1/x) rather than p.
    bool reciprocal = false;
    std::optional<Witness> witness;
    std::string detail;
};

struct SweepOutcome {
    std::size_t cells_checked = 0;
    std::size_t cells_skipped = 0;
    std::size_t polynomials_checked = 0;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    SweepOutcome& operator+=(const SweepOutcome& other);
};

/// True when the cell satisfies the claim's hypothesis (boundary equalities
/// included; only c > 0 style conditions are strict).
bool claim_hypothesis(Claim claim, const FamilySpec& cell);

SweepOutcome run_sweep(const SweepPlan& plan);

/// The fixed published corollary grid (q-Eulerian, 1/k-Eulerian,
/// Carlitz-Scoville, type B, r-colored, and the three-parameter (p, q, r) family).
SweepOutcome corollary_suite();

/// Orders violations by family, parameter tuple, n and claim.
void sort_violations(std::vector<Violation>& v);

} // namespace eulerpoly
