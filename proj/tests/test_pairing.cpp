#include "doctest.h"
#include "support.hpp"

#include "nichols/pairing.hpp"

using namespace nichols;

namespace {

std::size_t at(const TruncatedHopf& h, const std::string& s)
{
    auto i = h.find(s);
    REQUIRE(i.has_value());
    return *i;
}

DiagonalBraiding cartan_a2_zeta3()
{
    CycScalar q = root_of_unity(3, 1);
    return DiagonalBraiding({{q, CycScalar(1)}, {q * q, q}});
}

std::vector<std::vector<CycScalar>> negated(std::vector<std::vector<CycScalar>> hs)
{
    for (auto& h : hs)
        for (auto& c : h)
            c = -c;
    return hs;
}

} // namespace

TEST_CASE("graded dual pairing values")
{
    CycScalar q = root_of_unity(5, 2);
    PairingTable p = graded_dual_pairing(DiagonalBraiding({{q}}), 3);
    CHECK(p.value(at(p.left, "x1"), at(p.right, "y1")) == CycScalar(1));
    CHECK(p.value(at(p.left, "x1*x1"), at(p.right, "y1*y1")) == CycScalar(1) + q);
    CHECK(p.value(at(p.left, "x1*x1*x1"), at(p.right, "y1*y1*y1")) == (CycScalar(1) + q) * (CycScalar(1) + q + q * q));
    CHECK(p.value(at(p.left, "x1"), at(p.right, "y1*y1")).is_zero());
    CHECK(p.value(at(p.left, "1"), at(p.right, "y1")).is_zero());

    PairingTable two = graded_dual_pairing(cartan_a2_zeta3(), 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(two.value(at(two.left, "x" + std::to_string(i)), at(two.right, "y" + std::to_string(j))) ==
                  CycScalar(i == j ? 1 : 0));
    // (x_i x_j|y_k y_l) = delta_il delta_jk + q_kl delta_ik delta_jl
    DiagonalBraiding b = cartan_a2_zeta3();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    CycScalar expect((i == l && j == k) ? 1 : 0);
                    if (i == k && j == l)
                        expect += b(k, l);
                    auto name = [](char c, int s, int t) {
                        return std::string(1, c) + std::to_string(s + 1) + "*" + c + std::to_string(t + 1);
                    };
                    CHECK(two.value(at(two.left, name('x', i, j)), at(two.right, name('y', k, l))) == expect);
                }
}

TEST_CASE("gram ranks match Nichols dimensions")
{
    for (int N = 2; N <= 4; ++N) {
        DiagonalBraiding b({{root_of_unity(N, 1)}});
        PairingTable p = graded_dual_pairing(b, 4);
        auto ranks = gram_ranks(p, 4);
        GradedQuotient gq = nichols_truncated(b, 4);
        for (int n = 0; n <= 4; ++n)
            CHECK(ranks[static_cast<std::size_t>(n)] == gq.dim(n));
    }
    PairingTable a2 = graded_dual_pairing(cartan_a2_zeta3(), 4);
    auto ranks = gram_ranks(a2, 4);
    GradedQuotient gq = nichols_truncated(cartan_a2_zeta3(), 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(ranks[static_cast<std::size_t>(n)] == gq.dim(n));
    CHECK_FALSE(nondegenerate(a2, 4));
    CHECK(nondegenerate(nichols_pairing(cartan_a2_zeta3(), 4), 4));
}

TEST_CASE("Hopf pairing identities")
{
    AxiomReport t = verify_hopf_pairing(graded_dual_pairing(cartan_a2_zeta3(), 4), 4);
    CHECK(t.passed());
    CHECK(verify_hopf_pairing(graded_dual_pairing(DiagonalBraiding({{root_of_unity(4, 1)}}), 4), 4).passed());
    CHECK(verify_hopf_pairing(nichols_pairing(cartan_a2_zeta3(), 4), 4).passed());

    PairingTable bad = graded_dual_pairing(cartan_a2_zeta3(), 3);
    const std::size_t a = at(bad.left, "x1*x2");
    const std::size_t u = at(bad.right, "y2*y1");
    bad.set(a, u, bad.value(a, u) + CycScalar(1));
    AxiomReport rep = verify_hopf_pairing(bad, 3);
    CHECK(rep.failed("(ab|u) = (a|u_2)(b|u_1)"));
    bool witnessed = false;
    for (const auto& v : rep.violations)
        witnessed = witnessed || v.witness == "(x1 * x2|y2*y1)";
    CHECK(witnessed);

    PairingTable zero = bad;
    zero.values.clear();
    AxiomReport z = verify_hopf_pairing(zero, 2);
    CHECK_FALSE(z.failed("(ab|u) = (a|u_2)(b|u_1)"));
    CHECK_FALSE(z.failed("(a|uv) = (a_2|u)(a_1|v)"));
    CHECK_FALSE(z.failed("(S a|u) = (a|S u)"));
    CHECK_FALSE(nondegenerate(zero, 2));
}

TEST_CASE("action compatibility")
{
    PairingTable p = graded_dual_pairing(cartan_a2_zeta3(), 3);
    std::vector<std::vector<CycScalar>> hs{{CycScalar(1), CycScalar(2)}};
    HopfAction left = grading_action(p.left, hs);
    CHECK(verify_action_compatibility(p, left, grading_action(p.right, negated(hs)), 3).passed());
    CHECK_FALSE(verify_action_compatibility(p, left, grading_action(p.right, hs), 3).passed());
    CHECK_FALSE(verify_action_compatibility(p, left, zero_action(p.right, 1), 3).passed());
    CHECK(verify_action_compatibility(p, zero_action(p.left, 1), zero_action(p.right, 1), 3).passed());
    CHECK_THROWS_AS(verify_action_compatibility(p, left, zero_action(p.right, 2), 3), Error);

    // transport recovers D_{-h}
    PairingTable n = nichols_pairing(cartan_a2_zeta3(), 4);
    HopfAction l = grading_action(n.left, hs);
    HopfAction r = transport_action(n, l, 4);
    HopfAction expect = grading_action(n.right, negated(hs));
    for (std::size_t u = 0; u < n.right.dim(); ++u)
        CHECK(r.table[0][u] == expect.table[0][u]);
    CHECK_THROWS_AS(transport_action(p, grading_action(p.left, hs), 3), Error);
}

TEST_CASE("module Hopf verdicts transfer across the pairing")
{
    PairingTable p = nichols_pairing(cartan_a2_zeta3(), 4);
    std::vector<std::vector<CycScalar>> hs{{CycScalar(1), CycScalar(0)}, {CycScalar(0), CycScalar(1)}};
    LemmaVerdict ok = lemma_transfer_check(p, grading_action(p.left, hs), grading_action(p.right, negated(hs)), 4);
    CHECK(ok.left.passed());
    CHECK(ok.right.passed());
    CHECK(ok.agree);

    // x1 -> 1 is not a derivation or a coderivation
    PairingTable s = nichols_pairing(DiagonalBraiding({{CycScalar(-1)}}), 2);
    HopfAction bad = zero_action(s.left, 1);
    bad.table[0][at(s.left, "x1")] = unit_vector(s.left.unit);
    HopfAction moved = transport_action(s, bad, 2);
    LemmaVerdict v = lemma_transfer_check(s, bad, moved, 2);
    CHECK_FALSE(v.left.passed());
    CHECK_FALSE(v.right.passed());
    CHECK(v.agree);

    PairingTable t = graded_dual_pairing(cartan_a2_zeta3(), 3);
    CHECK_THROWS_AS(lemma_transfer_check(t, zero_action(t.left, 1), zero_action(t.right, 1), 3), Error);
}
