#include "doctest.h"
#include "support.hpp"

#include "nichols/serialize.hpp"
#include "nichols/unrolled.hpp"

using namespace nichols;

namespace {

TruncatedHopf sweedler()
{
    DiagonalBraiding b({{CycScalar(-1)}});
    return bosonize(nichols_truncated(b, 4), derive_realization(b), 4);
}

} // namespace

TEST_CASE("TruncatedHopf round trips through JSON")
{
    TruncatedHopf h = sweedler();
    Json j = to_json(h);
    CHECK(j["version"] == kFormatVersion);
    CHECK(j["kind"] == "truncated_hopf");
    TruncatedHopf back = hopf_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.dim() == 4);
    CHECK(verify_hopf(back, 4).passed());

    DiagonalBraiding b({{root_of_unity(4, 1)}});
    TruncatedHopf u = unrolled_bosonization(nichols_truncated(b, 4), derive_realization(b), torus_algebra(1), 3);
    Json ju = to_json(u);
    TruncatedHopf ub = hopf_from_json(ju);
    CHECK(to_json(ub) == ju);
    CHECK(ub.dim() == u.dim());
    CHECK_FALSE(ub.complete);
    // overflow entries stay absent after the round trip
    CHECK(ub.product_keys() == u.product_keys());
    CHECK(verify_hopf(ub, 3).passed());
}

TEST_CASE("malformed documents are rejected")
{
    Json j = to_json(sweedler());
    Json wrong_version = j;
    wrong_version["version"] = 99;
    CHECK_THROWS_WITH_AS(hopf_from_json(wrong_version), doctest::Contains("BadDocument"), Error);
    Json missing = j;
    missing.erase("products");
    CHECK_THROWS_WITH_AS(hopf_from_json(missing), doctest::Contains("BadDocument"), Error);
    Json out_of_range = j;
    out_of_range["unit"] = 17;
    CHECK_THROWS_WITH_AS(hopf_from_json(out_of_range), doctest::Contains("BadDocument"), Error);
    CHECK_THROWS_AS(hopf_from_json(Json::array()), Error);
}

TEST_CASE("axiom reports serialize with witnesses")
{
    TruncatedHopf h = sweedler();
    h.set_product(*h.find("x1#g(0)"), *h.find("1#g(1)"), SparseVec{});
    AxiomReport r = verify_hopf(h, 4);
    Json j = to_json(r);
    CHECK(j["passed"] == false);
    CHECK_FALSE(j["violations"].empty());
    CHECK(j["violations"][0].contains("witness"));
    CHECK(j["axioms"][0]["axiom"] == "associativity");
}
