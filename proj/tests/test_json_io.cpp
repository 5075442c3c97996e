#include <catch2/catch_amalgamated.hpp>

#include "flagpos/json_io.hpp"
#include "support/generators.hpp"

using namespace flagpos;

TEST_CASE("matroid schema roundtrip") {
    const Json j = Json::parse(R"({"n":4,"rank":2,"bases":[[1,2],[1,4],[2,4]]})");
    const Matroid m = matroid_from_json(j);
    CHECK(m.n() == 4);
    CHECK(m.rank() == 2);
    CHECK(matroid_from_json(matroid_to_json(m)).same_as(m));
}

TEST_CASE("matroid schema errors carry JSON pointers") {
    try {
        matroid_from_json(Json::parse(R"({"n":4,"rank":2,"bases":[[1,2],[1,7]]})"));
        FAIL("expected json_error");
    } catch (const json_error& e) {
        CHECK(e.pointer() == "/bases/1");
    }
    try {
        matroid_from_json(Json::parse(R"({"n":4,"bases":[[1,2]]})"));
        FAIL("expected json_error");
    } catch (const json_error& e) {
        CHECK(e.pointer() == "");
    }
    try {
        matroid_from_json(Json::parse(R"({"n":4,"rank":2,"bases":[[1,2],[3]]})"));
        FAIL("expected json_error");
    } catch (const json_error& e) {
        CHECK(e.pointer() == "/bases/1");
    }
}

TEST_CASE("necklace schema roundtrip") {
    const Json j = Json::parse(R"({"n":4,"d":2,"sets":[[1,2],[2,4],[1,4],[1,4]]})");
    const Necklace nk = necklace_from_json(j);
    CHECK(is_grassmann_necklace(nk));
    CHECK(necklace_from_json(necklace_to_json(nk)) == nk);
}

TEST_CASE("valuated vector schema") {
    const Json j = Json::parse(
        R"({"n":4,"r":2,"coords":{"1,2":"1","1,3":"0","1,4":"0","2,3":"0","2,4":"0","3,4":"1/1"}})");
    const TropVec w = tropvec_from_json(j);
    CHECK(w.at(mask_of({1, 2}, 4)).v == 1);
    CHECK(tropvec_from_json(tropvec_to_json(w)).coords() == w.coords());

    // omitted coordinates default to inf
    const TropVec sparse = tropvec_from_json(Json::parse(R"({"n":3,"r":1,"coords":{"2":"-3/2"}})"));
    CHECK(sparse.support() == std::vector<Mask>({mask_bit(2)}));
    CHECK_FALSE(sparse.at(mask_bit(1)).finite);

    CHECK_THROWS_AS(tropvec_from_json(Json::parse(R"({"n":3,"r":1,"coords":{"5":"0"}})")), json_error);
    CHECK_THROWS_AS(tropvec_from_json(Json::parse(R"({"n":3,"r":1,"coords":{"2":"1/0"}})")), json_error);
    CHECK_THROWS_AS(tropvec_from_json(Json::parse(R"({"n":3,"r":1,"coords":{}})")), json_error);
}

TEST_CASE("flag vector and permutation schemas") {
    const Json j = Json::parse(R"([
        {"n":3,"r":1,"coords":{"1":"0","2":"0","3":"1"}},
        {"n":3,"r":2,"coords":{"1,2":"1","1,3":"0","2,3":"0"}}
    ])");
    const FlagTropVec mu = flagvec_from_json(j);
    CHECK(mu.ranks() == std::vector<int>({1, 2}));
    CHECK(flagvec_from_json(flagvec_to_json(mu)).mus.size() == 2);

    CHECK(perm_from_json(Json::parse("[2,4,1,3]")) == Perm({2, 4, 1, 3}));
    CHECK_THROWS_AS(perm_from_json(Json::parse("[2,2,1]")), json_error);
}

TEST_CASE("emitted JSON is re-readable", "[property]") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 50; ++t) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const Matroid m = testgen::random_matroid(n, r, rng);
        REQUIRE(matroid_from_json(matroid_to_json(m)).same_as(m));

        const TropVec w = testgen::random_trop_vector(n, r, 0.25, rng);
        REQUIRE(tropvec_from_json(tropvec_to_json(w)).coords() == w.coords());

        const Necklace nk = random_necklace(n, r, rng);
        REQUIRE(necklace_from_json(necklace_to_json(nk)) == nk);
    }
}
