#pragma once

#include "eulerpoly/scalar.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eulerpoly {

/// Inputs to the six-term ratio inequality used in the ratio-monotonicity
/// induction. Hypothesis:
///   a_i > 0,  a1/a2 <= a3/a4 <= a5/a6,  a2/a3 <= a4/a5,  a3 <= a5,  a4 <= a6,
///   0 < l2 <= l1 <= l,  mu >= 0.
struct Lemma2Input {
    std::array<Scalar, 6> a;  // a[0] is a1
    Scalar l1, l2, l, mu;
};

/// Conclusion:
///   (l1 a1 + (l-l1) a3) / (l2 a2 + (l-l2) a4)
///     <= (l1 a3 + (l-l1) a5 + mu (a5-a3)) / (l2 a4 + (l-l2) a6 + mu (a6-a4))
/// together with the intermediate steps of its proof.
struct Lemma2Outcome {
    bool sum_bound = false;        // a1/a2 <= (a3+a5)/(a4+a6)
    bool weighted_step = false;    // left ratio <= (l1 a3 + (l-l1) a5)/(l2 a4 + (l-l2) a6)
    bool weighted_to_tail = false; // that ratio <= a5/a6
    bool tail_to_gap = false;      // a5/a6 <= (a5-a3)/(a6-a4), as a5 (a6-a4) <= a6 (a5-a3)
    bool conclusion = false;
    Scalar conclusion_lhs;         // cross-products of the conclusion
    Scalar conclusion_rhs;

    bool all_hold() const { return sum_bound && weighted_step && weighted_to_tail && tail_to_gap && conclusion; }
};

class HypothesisViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Empty string when the hypothesis holds, otherwise the first failed condition.
std::string lemma2_hypothesis_failure(const Lemma2Input& in);

/// Throws HypothesisViolated when the hypothesis does not hold. A false
/// conclusion is reported in the outcome, never thrown.
Lemma2Outcome lemma2_check(const Lemma2Input& in);

struct Lemma2Campaign {
    std::size_t accepted = 0;
    std::size_t attempted = 0;
    std::size_t failures = 0;
};

/// Rejection-samples `samples` hypothesis-satisfying rational tuples from a
/// seeded generator and checks each one.
Lemma2Campaign lemma2_random_campaign(std::size_t samples, std::uint64_t seed);

} // namespace eulerpoly
