#include "eulerpoly/lemma.hpp"

#include <algorithm>
#include <random>

namespace eulerpoly {

std::string lemma2_hypothesis_failure(const Lemma2Input& in)
{
    const auto& [a1, a2, a3, a4, a5, a6] = in.a;
    for (std::size_t i = 0; i < 6; ++i)
        if (in.a[i] <= 0) return "a" + std::to_string(i + 1) + " must be positive";
    if (a1 * a4 > a3 * a2) return "a1/a2 <= a3/a4";
    if (a3 * a6 > a5 * a4) return "a3/a4 <= a5/a6";
    if (a2 * a5 > a4 * a3) return "a2/a3 <= a4/a5";
    if (a3 > a5) return "a3 <= a5";
    if (a4 > a6) return "a4 <= a6";
    if (!(in.l2 > 0)) return "0 < l2";
    if (in.l2 > in.l1) return "l2 <= l1";
    if (in.l1 > in.l) return "l1 <= l";
    if (in.mu < 0) return "mu >= 0";
    return {};
}

Lemma2Outcome lemma2_check(const Lemma2Input& in)
{
    if (auto failure = lemma2_hypothesis_failure(in); !failure.empty())
        throw HypothesisViolated("lemma2 hypothesis violated: " + failure);
    const auto& [a1, a2, a3, a4, a5, a6] = in.a;
    const Scalar &l1 = in.l1, &l2 = in.l2, &l = in.l, &mu = in.mu;

    // Every denominator below is positive under the hypothesis, so each
    // ratio comparison is an exact cross-multiplication.
    const Scalar left_num = l1 * a1 + (l - l1) * a3;
    const Scalar left_den = l2 * a2 + (l - l2) * a4;
    const Scalar mid_num = l1 * a3 + (l - l1) * a5;
    const Scalar mid_den = l2 * a4 + (l - l2) * a6;
    const Scalar right_num = mid_num + mu * (a5 - a3);
    const Scalar right_den = mid_den + mu * (a6 - a4);

    Lemma2Outcome out;
    out.sum_bound = a1 * (a4 + a6) <= a2 * (a3 + a5);
    out.weighted_step = left_num * mid_den <= left_den * mid_num;
    out.weighted_to_tail = mid_num * a6 <= mid_den * a5;
    out.tail_to_gap = a5 * (a6 - a4) <= a6 * (a5 - a3);
    out.conclusion_lhs = left_num * right_den;
    out.conclusion_rhs = left_den * right_num;
    out.conclusion = out.conclusion_lhs <= out.conclusion_rhs;
    return out;
}

Lemma2Campaign lemma2_random_campaign(std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 40), den(1, 6), coin(0, 3);
    auto positive = [&] { return make_scalar(num(rng), den(rng)); };

    Lemma2Campaign c;
    while (c.accepted < samples) {
        ++c.attempted;
        Lemma2Input in;
        // a1/a2 <= a3/a4 <= a5/a6 and a4 <= a6 hold by construction; the
        // remaining conditions are left to rejection.
        std::array<Scalar, 3> ratios{positive(), positive(), positive()};
        std::sort(ratios.begin(), ratios.end());
        in.a[1] = positive();
        in.a[3] = positive();
        in.a[5] = positive();
        if (in.a[3] > in.a[5]) std::swap(in.a[3], in.a[5]);
        for (std::size_t i = 0; i < 3; ++i) in.a[2 * i] = ratios[i] * in.a[2 * i + 1];
        std::array<Scalar, 3> lambdas{positive(), positive(), positive()};
        std::sort(lambdas.begin(), lambdas.end());
        in.l2 = lambdas[0];
        in.l1 = lambdas[1];
        in.l = lambdas[2];
        in.mu = coin(rng) == 0 ? Scalar(0) : positive();
        if (!lemma2_hypothesis_failure(in).empty()) continue;
        ++c.accepted;
        if (!lemma2_check(in).all_hold()) ++c.failures;
    }
    return c;
}

} // namespace eulerpoly
