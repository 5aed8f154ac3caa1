#include "support.hpp"

#include "eulerpoly/poly.hpp"

using namespace eulerpoly;
using testing::P;
using testing::Q;

TEST_CASE("scalars are stored in lowest terms")
{
    const Scalar s = parse_scalar("-6/4");
    CHECK(s.get_num() == -3);
    CHECK(s.get_den() == 2);
    CHECK(to_string(parse_scalar("10/5")) == "2");
    CHECK(to_string(parse_scalar(" -3/4 ")) == "-3/4");
    CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
    CHECK(Q(2, 3) * Q(9, 4) == Q(3, 2));
    CHECK_THROWS_AS(parse_scalar("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_scalar("x"), PreconditionError);
    CHECK_THROWS_AS(parse_scalar(""), PreconditionError);
    CHECK_THROWS_AS(parse_scalar("1.5"), PreconditionError);
    CHECK_THROWS_AS(parse_scalar("6/-4"), PreconditionError);
    CHECK(floor_of(Q(-3, 2)) == -2);
    CHECK(ceil_of(Q(-3, 2)) == -1);
    CHECK(floor_of(Q(3, 2)) == 1);
    CHECK(ceil_of(Q(3, 2)) == 2);
}

TEST_CASE("constructors normalize trailing zeros")
{
    CHECK(P({1, 2, 0, 0}).size() == 2);
    CHECK(P({0, 0}).is_zero());
    CHECK(P({0}) == Poly());
    CHECK(Poly().degree().is_neg_infinity());
    CHECK(Poly().degree() < Degree(0));
    CHECK(P({5}).degree() == 0u);
    CHECK(P({1, 0, 3}).degree() == 2u);
    CHECK(P({1, 1}) - P({1, 1}) == Poly());
    CHECK((P({1, 1}) - P({0, 1})).size() == 1);
}

TEST_CASE("poly_add")
{
    CHECK(poly_add(P({1, 1}), P({1, 1})) == P({2, 2}));
    const Poly p = P({3, -1, 4});
    CHECK(poly_add(p, Poly()) == p);
    CHECK(poly_add(P({1, 7, 1}), P({0, 1}) * P({3, 3})) == P({1, 10, 4}));
}

TEST_CASE("poly_mul")
{
    CHECK(poly_mul(P({1, 1}), P({1, 1})) == P({1, 2, 1}));
    const Poly p = Poly{Q(1, 2), 3, Q(-2, 7)};
    CHECK(poly_mul(p, P({1})) == p);
    CHECK(poly_mul(p, Poly()) == Poly());
    const Scalar q = 2;
    CHECK(poly_mul(Poly{q}, Poly{q, 1}) == P({4, 2}));
}

TEST_CASE("derivative")
{
    CHECK(derivative(P({1, 4, 1})) == P({4, 2}));
    CHECK(derivative(P({7})) == Poly());
    CHECK(derivative(Poly()) == Poly());
    testing::RationalSource src(11);
    for (int i = 0; i < 10; ++i) {
        const Scalar b = src.positive(), c = src.positive();
        CHECK(derivative(Poly{c, b}) == Poly{b});
    }
}

TEST_CASE("reverse")
{
    testing::RationalSource src(12);
    const Scalar b = src.positive(), c = src.positive();
    CHECK(reverse(Poly{c, b}, 1) == Poly{b, c});
    CHECK(reverse(P({1, 4, 1}), 2) == P({1, 4, 1}));
    CHECK(reverse(P({16, 66, 36, 2}), 3) == P({2, 36, 66, 16}));
    CHECK(reverse(P({1, 2}), 3) == P({0, 0, 2, 1}));
    CHECK(reverse(Poly(), 0) == Poly());
    CHECK_THROWS_AS(reverse(P({1, 2, 3}), 1), PreconditionError);
}

TEST_CASE("reverse is an involution at fixed n")
{
    testing::RationalSource src(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t deg = trial % 7;
        std::vector<Scalar> v(deg + 1);
        for (auto& x : v) x = src.nonnegative() - 3;
        const Poly p(v);
        const std::size_t n = deg + trial % 3;
        CHECK(reverse(reverse(p, n), n) == p);
    }
}

TEST_CASE("div_one_minus_x")
{
    CHECK(div_one_minus_x(P({1, 0, -1})) == P({1, 1}));
    CHECK(div_one_minus_x(P({81, 198, 0, -198, -81})) == P({81, 279, 279, 81}));
    CHECK(div_one_minus_x(Poly()) == Poly());
    CHECK_THROWS_AS(div_one_minus_x(P({1, 1})), PreconditionError);

    testing::RationalSource src(14);
    const Poly one_minus_x = P({1, -1});
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Scalar> v(1 + trial % 8);
        for (auto& x : v) x = src.positive() - 4;
        const Poly q(v);
        CHECK(div_one_minus_x(poly_mul(one_minus_x, q)) == q);
    }
}

TEST_CASE("eval")
{
    CHECK(eval(P({1, 11, 11, 1}), 1) == 24);
    CHECK(eval(Poly{Q(3, 7), 5, 9}, 0) == Q(3, 7));
    const Scalar q = 2;
    CHECK(eval(Poly{q} * Poly{q, 1}, 1) == 6);
    CHECK(eval(Poly(), Q(5, 3)) == 0);
}

TEST_CASE("eval is multiplicative")
{
    testing::RationalSource src(15);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Scalar> u(1 + trial % 5), v(1 + trial % 4);
        for (auto& x : u) x = src.positive() - 3;
        for (auto& x : v) x = src.positive() - 3;
        const Poly p(u), q(v);
        const Scalar t = src.positive() - 2;
        CHECK(eval(poly_mul(p, q), t) == eval(p, t) * eval(q, t));
    }
}

TEST_CASE("divmod, gcd and primitive part")
{
    const Poly a = P({1, 1}), b = P({2, 1}), c = P({3, 1});
    const DivMod dm = divmod(a * b * c + P({5}), b);
    CHECK(dm.quotient == a * c);
    CHECK(dm.remainder == P({5}));
    CHECK(poly_gcd(a * a * b, a * c) == a);
    CHECK(poly_gcd(P({4, 2}), P({6, 3})) == P({2, 1}));
    CHECK(primitive_part(Poly{Q(1, 2), Q(-3, 4)}) == P({2, -3}));
    CHECK(primitive_part(P({-6, 4})) == P({-3, 2}));
    CHECK_THROWS_AS(divmod(a, Poly()), PreconditionError);
}

TEST_CASE("rendering")
{
    CHECK(P({16, 66, 36, 2}).to_string() == "16 + 66*x + 36*x^2 + 2*x^3");
    CHECK(P({1, 1}).to_string() == "1 + x");
    CHECK(P({0, -1, 0, 1}).to_string() == "-x + x^3");
    CHECK(Poly{Q(-1, 2), 3}.to_string() == "-1/2 + 3*x");
    CHECK(Poly().to_string() == "0");
    CHECK(P({0, 3, 1}).to_string("q") == "3*q + q^2");
}

TEST_CASE("one_plus_x_pow and pow agree")
{
    for (std::size_t k = 0; k < 8; ++k) CHECK(Poly::one_plus_x_pow(k) == pow(P({1, 1}), k));
    CHECK(pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
}
