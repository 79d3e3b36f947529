#include "doctest.h"
#include "support.hpp"

#include "nichols/braided_space.hpp"

using namespace nichols;

namespace {

DiagonalBraiding diag2(CycScalar a, CycScalar b, CycScalar c, CycScalar d)
{
    return DiagonalBraiding({{a, b}, {c, d}});
}

} // namespace

TEST_CASE("rank one realizations")
{
    YDRealization r = derive_realization(DiagonalBraiding({{CycScalar(-1)}}));
    CHECK(r.group.exponents == std::vector<int>{2});
    CHECK(r.g[0] == GroupElement{1});
    CHECK(r.chi[0](r.g[0]) == CycScalar(-1));

    YDRealization r4 = derive_realization(DiagonalBraiding({{root_of_unity(4, 1)}}));
    CHECK(r4.group.exponents == std::vector<int>{4});
    CHECK(r4.chi[0](r4.g[0]) == root_of_unity(4, 1));
    CHECK(validate_realization(r4).passed());
}

TEST_CASE("trivial braiding gives the trivial group")
{
    YDRealization r = derive_realization(diag2(1, 1, 1, 1));
    CHECK(r.group.exponents == std::vector<int>{1, 1});
    CHECK(r.group.order() == 1);
    for (const auto& c : r.chi)
        CHECK(c(r.g[0]).is_one());
}

TEST_CASE("non-roots of unity are rejected")
{
    try {
        derive_realization(diag2(2, 1, 1, -1));
        FAIL("expected NotRootOfUnity");
    } catch (const Error& e) {
        CHECK(e.code() == "NotRootOfUnity");
    }
}

TEST_CASE("validate_realization reports the violating pair")
{
    CycScalar q = root_of_unity(3, 1);
    YDRealization r = derive_realization(DiagonalBraiding({{q}}));
    r.chi[0].values[0] = RootOfUnity{3, 2};
    RealizationReport rep = validate_realization(r);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].i == 0);
    CHECK(rep.violations[0].j == 0);
    CHECK(rep.violations[0].character_value == q * q);
    CHECK(rep.violations[0].braiding_value == q);

    YDRealization s = derive_realization(diag2(-1, 1, 1, -1));
    CHECK(validate_realization(s).passed());
}

TEST_CASE("derived realizations always validate")
{
    const int orders[] = {1, 2, 3, 4, 6};
    for (int a : orders)
        for (int b : orders)
            for (int c : orders) {
                DiagonalBraiding br = diag2(root_of_unity(a, 1), root_of_unity(b, 1), root_of_unity(c, c > 1 ? c - 1 : 0),
                                            root_of_unity(a * b, 1));
                CHECK(validate_realization(derive_realization(br)).passed());
            }
}

TEST_CASE("bd_V dimension follows the isotypic decomposition")
{
    // distinct pairs: bd_V = t_V
    YDRealization r = derive_realization(diag2(-1, 1, 1, root_of_unity(3, 1)));
    LieAction bd = biderivation_algebra(r);
    CHECK(bd.dim() == 2);
    for (const auto& m : bd.maps)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (i != j)
                    CHECK(m(i, j).is_zero());

    // two equal pairs: gl(2)
    AbelianGroup z2{{2}};
    Character sign{{RootOfUnity{2, 1}}};
    YDRealization same = realization_from_pairs(z2, {{1}, {1}}, {sign, sign});
    LieAction gl2 = biderivation_algebra(same);
    CHECK(gl2.dim() == 4);
    CHECK_FALSE(gl2.algebra.is_abelian());

    YDRealization one = derive_realization(DiagonalBraiding({{root_of_unity(5, 2)}}));
    CHECK(biderivation_algebra(one).dim() == 1);
}

TEST_CASE("bd_V maps commute with the group action and grading")
{
    AbelianGroup g{{2, 3}};
    Character a{{RootOfUnity{2, 1}, RootOfUnity{3, 1}}};
    Character b{{RootOfUnity{2, 0}, RootOfUnity{3, 2}}};
    YDRealization r = realization_from_pairs(g, {{1, 0}, {1, 0}, {0, 1}}, {a, a, b});
    LieAction bd = biderivation_algebra(r);
    CHECK(bd.dim() == 5);
    for (const auto& m : bd.maps)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero())
                    continue;
                CHECK(r.g[static_cast<std::size_t>(i)] == r.g[static_cast<std::size_t>(j)]);
                for (const auto& h : g.elements())
                    CHECK(r.chi[static_cast<std::size_t>(i)](h) == r.chi[static_cast<std::size_t>(j)](h));
            }
    // t_V inside bd_V
    for (const auto& d : torus_algebra(3).maps)
        CHECK(is_yd_morphism(r, d));
}

TEST_CASE("torus maps")
{
    CHECK(torus_action({0, 0}).is_zero());
    CHECK(torus_action({1, 1, 1}) == Matrix::identity(3));
    CHECK(bracket(torus_action({1, 2}), torus_action({3, -1})).is_zero());
}

TEST_CASE("elementary maps use the row convention")
{
    Matrix e12 = elementary_map(2, 0, 1);
    CHECK(e12(0, 1) == CycScalar(1));
    Matrix e21 = elementary_map(2, 1, 0);
    // E_12 o E_21 sends x_2 -> x_1 -> x_2
    Matrix comp = compose(e12, e21);
    CHECK(comp(1, 1) == CycScalar(1));
    CHECK(comp(0, 0).is_zero());
}

TEST_CASE("close_under_bracket")
{
    AbelianGroup z2{{2}};
    Character sign{{RootOfUnity{2, 1}}};
    YDRealization r = realization_from_pairs(z2, {{1}, {1}}, {sign, sign});
    CHECK(close_under_bracket(r, {torus_action({1, 3})}).dim() == 1);
    CHECK(close_under_bracket(r, biderivation_algebra(r).maps).dim() == 4);
    try {
        close_under_bracket(r, {elementary_map(2, 0, 1), elementary_map(2, 1, 0)});
        FAIL("expected NotClosed");
    } catch (const Error& e) {
        CHECK(e.code() == "NotClosed");
    }
    Matrix h = elementary_map(2, 0, 0) - elementary_map(2, 1, 1);
    LieAction sl2 = close_under_bracket(r, {elementary_map(2, 0, 1), elementary_map(2, 1, 0), h});
    CHECK(sl2.dim() == 3);
    // as maps, E_12 o E_21 = E_22 and E_21 o E_12 = E_11, so [E_12, E_21] = -h
    CHECK(sl2.algebra.constant(0, 1, 2) == CycScalar(-1));
    CHECK(sl2.algebra.constant(0, 1, 0).is_zero());

    YDRealization distinct = derive_realization(diag2(-1, 1, 1, root_of_unity(3, 1)));
    try {
        close_under_bracket(distinct, {elementary_map(2, 0, 1)});
        FAIL("expected NotYDMorphism");
    } catch (const Error& e) {
        CHECK(e.code() == "NotYDMorphism");
    }
    CHECK_THROWS_AS(close_under_bracket(r, {torus_action({1, 1}), torus_action({2, 2})}), Error);
}

TEST_CASE("abelian group enumeration")
{
    AbelianGroup g{{2, 3}};
    auto els = g.elements();
    REQUIRE(els.size() == 6);
    for (std::size_t k = 0; k < els.size(); ++k)
        CHECK(g.index_of(els[k]) == k);
    CHECK(g.add({1, 2}, {1, 2}) == GroupElement{0, 1});
    CHECK(g.negate({1, 1}) == GroupElement{1, 2});
    AbelianGroup trivial{{}};
    CHECK(trivial.elements().size() == 1);
}
