#include "support.hpp"

#include "eulerpoly/lemma.hpp"

using namespace eulerpoly;
using testing::Q;

namespace {

Lemma2Input input(std::array<long, 6> a, Scalar l1, Scalar l2, Scalar l, Scalar mu)
{
    Lemma2Input in;
    for (std::size_t i = 0; i < 6; ++i) in.a[i] = a[i];
    in.l1 = l1;
    in.l2 = l2;
    in.l = l;
    in.mu = mu;
    return in;
}

} // namespace

TEST_CASE("constant tuple holds with equality")
{
    const auto out = lemma2_check(input({1, 1, 1, 1, 1, 1}, 1, 1, 2, 0));
    CHECK(out.all_hold());
    CHECK(out.conclusion_lhs == out.conclusion_rhs);
}

TEST_CASE("increasing tuple")
{
    const auto in = input({1, 2, 2, 3, 3, 4}, 1, 1, 2, 1);
    CHECK(lemma2_hypothesis_failure(in).empty());
    const auto out = lemma2_check(in);
    CHECK(out.sum_bound);
    CHECK(out.weighted_step);
    CHECK(out.weighted_to_tail);
    CHECK(out.tail_to_gap);
    CHECK(out.conclusion);
    CHECK(out.conclusion_lhs <= out.conclusion_rhs);
}

TEST_CASE("hypothesis violations throw")
{
    CHECK_THROWS_AS(lemma2_check(input({1, 1, 3, 3, 2, 3}, 1, 1, 2, 0)), HypothesisViolated);
    CHECK_FALSE(lemma2_hypothesis_failure(input({1, 1, 3, 3, 2, 3}, 1, 1, 2, 0)).empty());
    CHECK_THROWS_AS(lemma2_check(input({1, 2, 2, 3, 3, 4}, 1, 2, 2, 0)), HypothesisViolated);
    CHECK_THROWS_AS(lemma2_check(input({1, 2, 2, 3, 3, 4}, 1, 1, 2, -1)), HypothesisViolated);
    CHECK_THROWS_AS(lemma2_check(input({0, 2, 2, 3, 3, 4}, 1, 1, 2, 0)), HypothesisViolated);
    CHECK_THROWS_AS(lemma2_check(input({1, 2, 2, 3, 3, 4}, 3, 1, 2, 0)), HypothesisViolated);
    // a1/a2 <= a3/a4 broken
    CHECK_THROWS_AS(lemma2_check(input({3, 1, 2, 3, 3, 4}, 1, 1, 2, 0)), HypothesisViolated);
}

TEST_CASE("boundary weights")
{
    // l2 = l1 = l puts all weight on the first terms
    CHECK(lemma2_check(input({1, 2, 2, 3, 3, 4}, 2, 2, 2, 0)).all_hold());
    CHECK(lemma2_check(input({1, 2, 2, 3, 3, 4}, Q(1, 3), Q(1, 5), 7, Q(9, 2))).all_hold());
}

TEST_CASE("random campaign")
{
    const auto c = lemma2_random_campaign(2000, 7);
    CHECK(c.accepted == 2000);
    CHECK(c.attempted >= c.accepted);
    CHECK(c.failures == 0);
    const auto d = lemma2_random_campaign(2000, 7);
    CHECK(d.attempted == c.attempted);
}
