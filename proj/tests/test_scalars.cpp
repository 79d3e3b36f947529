#include "doctest.h"
#include "support.hpp"

#include <numeric>
#include <random>

#include "nichols/expression.hpp"
#include "nichols/scalars.hpp"

using namespace nichols;

namespace {

CycScalar random_scalar(std::mt19937& rng, int m)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<mpq_class> c;
    for (int i = 0; i < m; ++i)
        c.emplace_back(num(rng), den(rng));
    for (auto& x : c)
        x.canonicalize();
    return CycScalar::from_power_basis(m, c);
}

} // namespace

TEST_CASE("roots of unity reduce to their canonical values")
{
    CHECK(root_of_unity(1, 0) == CycScalar(1));
    CHECK(root_of_unity(2, 1) == CycScalar(-1));
    CycScalar i = root_of_unity(4, 1);
    CHECK(i * i == root_of_unity(2, 1));
    // by hand: z^2 = -1 mod x^2+1, so the power-basis vector of i^2 is (-1, 0)
    CHECK((i * i).as_rational() == mpq_class(-1));
}

TEST_CASE("cube roots of unity sum to zero and fourth roots square to -1")
{
    CycScalar z = root_of_unity(3, 1);
    CHECK((z + z * z + CycScalar(1)).is_zero());
    CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == CycScalar(-1));
}

TEST_CASE("inverse multiplies back to one")
{
    CycScalar a = CycScalar(1) + root_of_unity(5, 1);
    CHECK(a.inverse() * a == CycScalar(1));
    CHECK_THROWS_AS(CycScalar(0).inverse(), Error);
    try {
        (void)(CycScalar(1) / CycScalar(0));
    } catch (const Error& e) {
        CHECK(e.code() == "DivisionByZero");
    }
}

TEST_CASE("multiplicative order")
{
    CHECK(multiplicative_order(CycScalar(1)) == 1);
    CHECK(multiplicative_order(CycScalar(-1)) == 2);
    CycScalar z6 = root_of_unity(6, 1);
    long n = 1;
    for (CycScalar p = z6; !p.is_one(); p *= z6)
        ++n;
    CHECK(n == 6);
    CHECK(multiplicative_order(z6) == n);
    CHECK_FALSE(multiplicative_order(CycScalar(2)).has_value());
    CHECK_FALSE(multiplicative_order(CycScalar(1) + root_of_unity(5, 1)).has_value());
    CHECK_THROWS_AS(multiplicative_order(CycScalar(0)), Error);
}

TEST_CASE("order of zeta_m^k is m / gcd(m, k) for m <= 24")
{
    for (int m = 1; m <= 24; ++m)
        for (long k = 0; k < m; ++k) {
            auto ord = multiplicative_order(root_of_unity(m, k));
            REQUIRE(ord.has_value());
            CHECK(*ord == m / std::gcd(static_cast<long>(m), k));
            CHECK(RootOfUnity{m, k}.multiplicative_order() == *ord);
        }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937 rng(20260101);
    const int conductors[] = {1, 3, 4, 5, 8, 12};
    for (int trial = 0; trial < 60; ++trial) {
        int ma = conductors[trial % 6];
        int mb = conductors[(trial / 6) % 6];
        int mc = conductors[(trial + 2) % 6];
        CycScalar a = random_scalar(rng, ma);
        CycScalar b = random_scalar(rng, mb);
        CycScalar c = random_scalar(rng, mc);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == CycScalar(0));
        if (!a.is_zero())
            CHECK(a * a.inverse() == CycScalar(1));
    }
}

TEST_CASE("cross-conductor equality after lifting")
{
    // zeta_6 = -zeta_3^2 and zeta_12^2 = zeta_6
    CHECK(root_of_unity(12, 2) == root_of_unity(6, 1));
    CHECK(root_of_unity(6, 1) == -(root_of_unity(3, 1) * root_of_unity(3, 1)));
    CHECK(root_of_unity(3, 1).lifted(12) == root_of_unity(3, 1));
}

TEST_CASE("render and parse round trip")
{
    std::mt19937 rng(7);
    for (int m : {1, 3, 4, 5, 7, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            CycScalar a = random_scalar(rng, m);
            CHECK(parse_scalar(a.render()) == a);
        }
    }
    CHECK(parse_scalar("z(4)^1") == root_of_unity(4, 1));
    CHECK(parse_scalar("1/2 + 3/2") == CycScalar(2));
    CHECK(parse_scalar("(z(3) + 1)^2") == root_of_unity(3, 1));
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("x1"), Error);
}

TEST_CASE("discrete logarithm")
{
    CHECK(discrete_log(root_of_unity(12, 5), 12) == 5);
    CHECK(discrete_log(CycScalar(-1), 4) == 2);
    CHECK_FALSE(discrete_log(root_of_unity(3, 1), 4).has_value());
}

TEST_CASE("expression parsing")
{
    NCPoly p = parse_expression("x1*x2 - z(3)^1*x2*x1", "x");
    REQUIRE(p.size() == 2);
    Monomial m12{{'x', 1}, {'x', 2}};
    Monomial m21{{'x', 2}, {'x', 1}};
    CHECK(p.at(m12) == CycScalar(1));
    CHECK(p.at(m21) == -root_of_unity(3, 1));
    NCPoly sq = parse_expression("(x1 + x2)^2", "x");
    CHECK(sq.size() == 4);
    CHECK_THROWS_AS(parse_expression("x1 / x2", "x"), ParseError);
    CHECK_THROWS_AS(parse_expression("g1", "x"), ParseError);
    CHECK(parse_expression("x1 - x1", "x").empty());
}
