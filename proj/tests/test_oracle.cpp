#include "support.hpp"

#include "eulerpoly/families.hpp"
#include "eulerpoly/oracle.hpp"

#include <algorithm>
#include <numeric>

using namespace eulerpoly;
using testing::P;
using testing::Q;

namespace {

Poly family_at(FamilyKind kind, const std::string& name, const Scalar& v, std::size_t n)
{
    return generate(FamilySpec{kind, {{name, v}}}, n)[n];
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST_CASE("q-Eulerian enumeration: small cases")
{
    const BiPoly a1 = qeulerian_bruteforce(1);
    CHECK(a1.x_coefficient(0) == P({0, 1}));
    const BiPoly a2 = qeulerian_bruteforce(2);
    CHECK(a2.x_coefficient(0) == P({0, 0, 1}));
    CHECK(a2.x_coefficient(1) == P({0, 1}));
    const BiPoly a3 = qeulerian_bruteforce(3);
    CHECK(a3.x_coefficient(0) == P({0, 0, 0, 1}));
    CHECK(a3.x_coefficient(1) == P({0, 1, 3}));
    CHECK(a3.x_coefficient(2) == P({0, 1}));
}

TEST_CASE("q-Eulerian enumeration matches the recurrence")
{
    for (int n = 1; n <= 8; ++n) {
        const BiPoly table = qeulerian_bruteforce(n);
        CHECK(table.total() == factorial(n));
        for (const Scalar& q : {Q(1, 2), Q(1), Q(2), Q(3)})
            CHECK(table.substitute_q(q) == family_at(FamilyKind::q_eulerian, "q", q, n));
        CHECK(table.substitute_q(1) == descent_bruteforce(n));
    }
}

TEST_CASE("q-Eulerian identity in q from n + 1 evaluation points")
{
    // Both sides have degree n in q, so agreement at n + 1 points is identity.
    for (int n = 1; n <= 7; ++n) {
        const BiPoly table = qeulerian_bruteforce(n);
        for (int j = 1; j <= n + 1; ++j) {
            const Scalar q = Q(j, 3);
            CHECK(table.substitute_q(q) == family_at(FamilyKind::q_eulerian, "q", q, n));
        }
    }
}

TEST_CASE("type B enumeration")
{
    const BiPoly b1 = typeb_bruteforce(1);
    CHECK(b1.x_coefficient(0) == P({1}));
    CHECK(b1.x_coefficient(1) == P({0, 1}));
    CHECK(typeb_bruteforce(2).substitute_q(1) == P({1, 6, 1}));
    const BiPoly b4 = typeb_bruteforce(4);
    CHECK(b4.x_coefficient(0) == P({1}));
    CHECK(b4.x_coefficient(1) == P({11, 32, 24, 8, 1}));
    CHECK(b4.x_coefficient(2) == P({11, 56, 96, 56, 11}));
    CHECK(b4.x_coefficient(3) == P({1, 8, 24, 32, 11}));
    CHECK(b4.x_coefficient(4) == P({0, 0, 0, 0, 1}));
    for (int n = 1; n <= 6; ++n) {
        const BiPoly table = typeb_bruteforce(n);
        CHECK(table.total() == factorial(n) * (BigInt(1) << n));
        for (const Scalar& q : {Q(1), Q(2), Q(3), Q(1, 2)})
            CHECK(table.substitute_q(q) == family_at(FamilyKind::type_b_q, "q", q, n));
    }
}

TEST_CASE("big descents")
{
    CHECK(big_descent_bruteforce(2) == P({2}));
    CHECK(big_descent_bruteforce(3) == P({4, 2}));
    CHECK(big_descent_bruteforce(4) == P({8, 14, 2}));
    for (int m = 2; m <= 8; ++m)
        CHECK(big_descent_bruteforce(m) == family_at(FamilyKind::q_eulerian, "q", 2, m - 1));
}

TEST_CASE("one-over-k enumeration")
{
    for (long kv = 1; kv <= 4; ++kv) {
        const Scalar k = kv;
        CHECK(one_over_k_bruteforce(k, 2) == Poly{1, k});
        CHECK(one_over_k_bruteforce(k, 3) == Poly{1, 3 * k + k * k, k * k});
        for (int n = 1; n <= 8; ++n) CHECK(one_over_k_bruteforce(k, n) == family_at(FamilyKind::one_over_k, "k", k, n));
    }
    CHECK(one_over_k_bruteforce(1, 5) == P({1, 26, 66, 26, 1}));
    CHECK(one_over_k_bruteforce(Q(1, 2), 4) == family_at(FamilyKind::one_over_k, "k", Q(1, 2), 4));
}

TEST_CASE("r-colored reductions against enumeration")
{
    for (int n = 1; n <= 6; ++n) {
        CHECK(family_at(FamilyKind::r_colored, "r", 1, n) == qeulerian_bruteforce(n).substitute_q(1));
        CHECK(family_at(FamilyKind::r_colored, "r", 2, n) == typeb_bruteforce(n).substitute_q(1));
    }
}

TEST_CASE("oracle size caps are hard preconditions")
{
    CHECK_THROWS_AS(qeulerian_bruteforce(0), PreconditionError);
    CHECK_THROWS_AS(qeulerian_bruteforce(kMaxSymmetricN + 1), PreconditionError);
    CHECK_THROWS_AS(typeb_bruteforce(kMaxHyperoctahedralN + 1), PreconditionError);
    CHECK_THROWS_AS(big_descent_bruteforce(1), PreconditionError);
    CHECK_THROWS_AS(big_descent_bruteforce(10), PreconditionError);
    CHECK_THROWS_AS(one_over_k_bruteforce(0, 3), PreconditionError);
    CHECK_THROWS_AS(descent_bruteforce(10), PreconditionError);
}

TEST_CASE("enumeration at the cap")
{
    const BiPoly a9 = qeulerian_bruteforce(9);
    CHECK(a9.total() == factorial(9));
    CHECK(a9.substitute_q(2) == family_at(FamilyKind::q_eulerian, "q", 2, 9));
    const BiPoly b7 = typeb_bruteforce(7);
    CHECK(b7.substitute_q(3) == family_at(FamilyKind::type_b_q, "q", 3, 7));
}

TEST_CASE("counting output is nonnegative")
{
    for (int n = 1; n <= 6; ++n) {
        const BiPoly a = qeulerian_bruteforce(n), b = typeb_bruteforce(n);
        for (std::size_t i = 0; i < a.x_size(); ++i)
            for (std::size_t j = 0; j < a.q_size(); ++j) CHECK(a.at(i, j) >= 0);
        for (std::size_t i = 0; i < b.x_size(); ++i)
            for (std::size_t j = 0; j < b.q_size(); ++j) CHECK(b.at(i, j) >= 0);
    }
}
