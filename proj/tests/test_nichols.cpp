#include "doctest.h"
#include "support.hpp"

#include <random>

#include "nichols/nichols.hpp"

using namespace nichols;

namespace {

// (n)_q! computed directly from its definition
CycScalar q_factorial(int n, const CycScalar& q)
{
    CycScalar f(1);
    for (int k = 1; k <= n; ++k) {
        CycScalar qk(0);
        for (int l = 0; l < k; ++l)
            qk += q.pow(l);
        f *= qk;
    }
    return f;
}

// coefficients of prod_k (1 + t^h + ... + t^{(N-1)h}) over the given heights
std::vector<std::size_t> pbw_series(const std::vector<int>& heights, int N)
{
    std::vector<std::size_t> poly{1};
    for (int h : heights) {
        std::vector<std::size_t> next(poly.size() + static_cast<std::size_t>((N - 1) * h), 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int e = 0; e < N; ++e)
                next[i + static_cast<std::size_t>(e * h)] += poly[i];
        poly = next;
    }
    return poly;
}

DiagonalBraiding cartan_a2_zeta3()
{
    CycScalar q = root_of_unity(3, 1);
    return DiagonalBraiding({{q, CycScalar(1)}, {q * q, q}});
}

YDRealization shared_pair_realization(int theta, int order)
{
    AbelianGroup g{{order}};
    Character chi{{RootOfUnity{order, 1}}};
    return realization_from_pairs(g, std::vector<GroupElement>(static_cast<std::size_t>(theta), {1}),
                                  std::vector<Character>(static_cast<std::size_t>(theta), chi));
}

} // namespace

TEST_CASE("relations in degree two")
{
    CHECK(relations_in_degree(2, DiagonalBraiding({{CycScalar(2)}})).empty());
    auto r = relations_in_degree(2, DiagonalBraiding({{CycScalar(-1)}}));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == TensorElement::word({0, 0}));

    // q = 1: the kernel of id + c is spanned by the commutators
    auto sym = relations_in_degree(2, DiagonalBraiding({{1, 1}, {1, 1}}));
    REQUIRE(sym.size() == 1);
    CHECK((sym[0] == TensorElement::word({1, 0}) - TensorElement::word({0, 1}) ||
           sym[0] == TensorElement::word({0, 1}) - TensorElement::word({1, 0})));
    // oracle: explicit dense elimination of id + c on T^2
    Matrix s2 = (LinOp::identity(4) + braid_generator(2, 1, DiagonalBraiding({{1, 1}, {1, 1}}))).dense();
    CHECK(rank(s2) == 3);
}

TEST_CASE("rank one dimensions follow the q-factorials")
{
    for (int N = 2; N <= 6; ++N) {
        CycScalar q = root_of_unity(N, 1);
        GradedQuotient gq = nichols_truncated(DiagonalBraiding({{q}}), N + 2);
        for (int n = 0; n <= N + 2; ++n)
            CHECK(gq.dim(n) == (q_factorial(n, q).is_zero() ? 0u : 1u));
        HilbertData h = hilbert_series(gq);
        CHECK(h.vanishing_degree == N);
        CHECK(h.total_dim == static_cast<std::size_t>(N));
    }
    GradedQuotient generic = nichols_truncated(DiagonalBraiding({{CycScalar(2)}}), 7);
    for (int n = 0; n <= 7; ++n)
        CHECK(generic.dim(n) == 1);
    CHECK_FALSE(hilbert_series(generic).total_dim.has_value());
}

TEST_CASE("symmetric braiding gives the polynomial ring")
{
    GradedQuotient gq = nichols_truncated(DiagonalBraiding({{1, 1}, {1, 1}}), 5);
    for (int n = 0; n <= 5; ++n)
        CHECK(gq.dim(n) == static_cast<std::size_t>(n + 1));
    GradedQuotient g3 = nichols_truncated(DiagonalBraiding({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(g3.dim(n) == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
}

TEST_CASE("hilbert series examples")
{
    HilbertData h = hilbert_series(nichols_truncated(DiagonalBraiding({{root_of_unity(4, 1)}}), 6));
    CHECK(h.dims == std::vector<std::size_t>{1, 1, 1, 1, 0, 0, 0});
    CHECK(h.total_dim == 4u);
    HilbertData s = hilbert_series(nichols_truncated(DiagonalBraiding({{CycScalar(-1)}}), 5));
    CHECK(s.dims == std::vector<std::size_t>{1, 1, 0, 0, 0, 0});
    CHECK(s.total_dim == 2u);
    CHECK_THROWS_AS(nichols_truncated(DiagonalBraiding({{CycScalar(-1)}}), 0), Error);
}

TEST_CASE("Cartan A2 at a cube root of unity")
{
    auto expect = pbw_series({1, 1, 2}, 3);
    REQUIRE(expect.size() == 9);
    std::size_t total = 0;
    for (auto d : expect)
        total += d;
    CHECK(total == 27);
    GradedQuotient gq = nichols_truncated(cartan_a2_zeta3(), 9);
    for (int n = 0; n <= 8; ++n)
        CHECK(gq.dim(n) == expect[static_cast<std::size_t>(n)]);
    CHECK(gq.dim(9) == 0);
    CHECK(hilbert_series(gq).total_dim == 27u);
}

TEST_CASE("ideal and projection compatibility")
{
    DiagonalBraiding b = cartan_a2_zeta3();
    GradedQuotient gq = nichols_truncated(b, 5);
    const int theta = 2;
    // relations times letters stay in the ideal
    for (int n = 2; n <= 4; ++n)
        for (const auto& r : gq.relation_basis(n))
            for (int a = 0; a < theta; ++a) {
                CHECK(gq.in_ideal(n + 1, to_vector(concat(r, TensorElement::word({a})), theta)));
                CHECK(gq.in_ideal(n + 1, to_vector(concat(TensorElement::word({a}), r), theta)));
            }
    // proj(uv) = proj(sec(proj u) sec(proj v)) for all words u, v
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 3; ++q)
            for (std::size_t u = 0; u < word_count(theta, p); ++u)
                for (std::size_t v = 0; v < word_count(theta, q); ++v) {
                    TensorElement tu = gq.section(p, gq.project_word(p, u));
                    TensorElement tv = gq.section(q, gq.project_word(q, v));
                    CHECK(gq.project(p + q, to_vector(concat(tu, tv), theta)) ==
                          gq.project_word(p + q, join_index(u, v, q, theta)));
                }
    // standard words project to themselves
    for (int n = 0; n <= 5; ++n)
        for (std::size_t k = 0; k < gq.dim(n); ++k)
            CHECK(gq.project_word(n, gq.basis(n)[k]) == unit_vector(k));
}

TEST_CASE("induced coproduct is coassociative")
{
    GradedQuotient gq = nichols_truncated(cartan_a2_zeta3(), 5);
    for (int n = 0; n <= 5; ++n)
        for (std::size_t a = 0; a < gq.dim(n); ++a)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n - p; ++q) {
                    const int r = n - p - q;
                    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CycScalar> lhs;
                    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CycScalar> rhs;
                    auto add = [](auto& m, auto key, const CycScalar& c) {
                        m[key] += c;
                        if (m[key].is_zero())
                            m.erase(key);
                    };
                    for (const auto& [lr, c] : gq.coproduct(n, a, p + q))
                        for (const auto& [lr2, c2] : gq.coproduct(p + q, lr.first, p))
                            add(lhs, std::make_tuple(lr2.first, lr2.second, lr.second), c * c2);
                    for (const auto& [lr, c] : gq.coproduct(n, a, p))
                        for (const auto& [lr2, c2] : gq.coproduct(q + r, lr.second, q))
                            add(rhs, std::make_tuple(lr.first, lr2.first, lr2.second), c * c2);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("pre-Nichols quotients")
{
    CycScalar i = root_of_unity(4, 1);
    DiagonalBraiding b4({{i}});
    GradedQuotient q4 = pre_nichols_quotient(b4, {TensorElement::word({0, 0, 0, 0})}, 6);
    CHECK(q4.dims() == std::vector<std::size_t>{1, 1, 1, 1, 0, 0, 0});
    for (int n = 0; n <= 6; ++n) {
        CHECK(q4.contained_in_nichols()[static_cast<std::size_t>(n)]);
        CHECK_FALSE(q4.strictly_smaller()[static_cast<std::size_t>(n)]);
    }

    DiagonalBraiding a2 = cartan_a2_zeta3();
    GradedQuotient free = pre_nichols_quotient(a2, {}, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(free.dim(n) == word_count(2, n));
    CHECK_FALSE(free.strictly_smaller()[2]);
    CHECK(free.strictly_smaller()[3]);

    std::vector<TensorElement> gens;
    GradedQuotient nq = nichols_truncated(a2, 5);
    for (int n = 2; n <= 5; ++n)
        for (const auto& r : nq.relation_basis(n))
            gens.push_back(r);
    GradedQuotient same = pre_nichols_quotient(a2, gens, 5);
    CHECK(same.dims() == nq.dims());

    // x^2 at q = i is not primitive enough: (1 + q) x (x) x survives
    try {
        pre_nichols_quotient(b4, {TensorElement::word({0, 0})}, 4);
        FAIL("expected NotCoideal");
    } catch (const Error& e) {
        CHECK(e.code() == "NotCoideal");
    }
    try {
        pre_nichols_quotient(a2, {TensorElement::word({0, 0}) + TensorElement::word({0, 1})}, 4);
        FAIL("expected NotHomogeneous");
    } catch (const Error& e) {
        CHECK(e.code() == "NotHomogeneous");
    }
    try {
        pre_nichols_quotient(a2, {TensorElement::scalar(1)}, 4);
        FAIL("expected CounitNonzero");
    } catch (const Error& e) {
        CHECK(e.code() == "CounitNonzero");
    }
}

TEST_CASE("stability under Lie actions")
{
    // torus maps preserve every homogeneous ideal
    DiagonalBraiding a2 = cartan_a2_zeta3();
    GradedQuotient nq = nichols_truncated(a2, 5);
    CHECK(stability_check(nq, torus_algebra(2)).passed());
    TensorElement r = parse_tensor_element("x1*x1*x1", 2);
    GradedQuotient pq = pre_nichols_quotient(a2, {r}, 5);
    CHECK(stability_check(pq, abelian_torus({{CycScalar(2), root_of_unity(3, 1)}})).passed());

    // ker S against the full bd_V
    YDRealization same = shared_pair_realization(2, 2);
    GradedQuotient bq = nichols_truncated(same.braiding, 5);
    CHECK(stability_check(bq, biderivation_algebra(same)).passed());
    YDRealization three = shared_pair_realization(3, 3);
    CHECK(stability_check(nichols_truncated(three.braiding, 4), biderivation_algebra(three)).passed());

    // the ideal generated by x_1^2 alone is moved by x_1 -> x_2
    GradedQuotient x11 = pre_nichols_quotient(same.braiding, {TensorElement::word({0, 0})}, 4);
    AxiomReport rep = stability_check(x11, close_under_bracket(same, {elementary_map(2, 0, 1)}));
    CHECK_FALSE(rep.passed());
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations[0].witness == "map 1 on x1*x1");
    CHECK(stability_check(x11, torus_algebra(2)).passed());
}
