#include <algorithm>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "flagpos/gale.hpp"
#include "flagpos/necklace.hpp"
#include "support/generators.hpp"

using namespace flagpos;

namespace {

Mask ms(std::initializer_list<int> elems, int n) { return mask_of(std::vector<int>(elems), n); }

Necklace nk(int n, int d, std::initializer_list<std::initializer_list<int>> sets) {
    Necklace out{n, d, {}};
    for (auto s : sets) out.sets.push_back(mask_of(std::vector<int>(s), n));
    return out;
}

Matroid make(int n, std::initializer_list<std::initializer_list<int>> bases) {
    std::vector<Mask> b;
    for (auto basis : bases) b.push_back(mask_of(std::vector<int>(basis), n));
    return Matroid(n, std::move(b));
}

}  // namespace

TEST_CASE("necklace axiom") {
    CHECK(is_grassmann_necklace(nk(4, 1, {{1}, {2}, {4}, {4}})));
    CHECK(is_grassmann_necklace(nk(5, 2, {{1, 2}, {2, 4}, {4, 5}, {4, 5}, {1, 5}})));
    CHECK_FALSE(is_grassmann_necklace(nk(4, 2, {{1, 2}, {3, 4}, {1, 2}, {1, 2}})));
    CHECK_THROWS_AS(is_grassmann_necklace(nk(4, 2, {{1, 2}, {1, 3}})), invalid_input);
}

TEST_CASE("necklace of a matroid") {
    CHECK(necklace_of(make(4, {{1, 2}, {1, 4}, {2, 4}})) == nk(4, 2, {{1, 2}, {2, 4}, {1, 4}, {1, 4}}));
    CHECK(necklace_of(make(4, {{1}, {2}, {4}})) == nk(4, 1, {{1}, {2}, {4}, {4}}));
    CHECK(necklace_of(uniform_matroid(2, 4)) == nk(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
}

TEST_CASE("positroid of a necklace") {
    CHECK(positroid_of(nk(4, 2, {{1, 2}, {2, 4}, {1, 4}, {1, 4}})).same_as(make(4, {{1, 2}, {1, 4}, {2, 4}})));
    CHECK(positroid_of(nk(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})).same_as(uniform_matroid(2, 4)));
    CHECK(positroid_of(nk(4, 1, {{1}, {2}, {4}, {4}})).same_as(make(4, {{1}, {2}, {4}})));
    CHECK_THROWS_AS(positroid_of(nk(4, 2, {{1, 2}, {3, 4}, {1, 2}, {1, 2}})), invalid_input);
}

TEST_CASE("positroid recognition") {
    CHECK(is_positroid(make(3, {{1, 2}, {1, 3}, {2, 3}})));
    CHECK(is_positroid(uniform_matroid(3, 6)));
    // consecutive blocks {1,2}|{3,4} give a positroid ...
    CHECK(is_positroid(make(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})));
    // ... interleaved blocks {1,3}|{2,4} do not: the necklace roundtrip
    // inflates {12,14,23,34} to the uniform matroid
    CHECK_FALSE(is_positroid(make(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}})));
}

TEST_CASE("pair_to_necklace and the Construction #1 basis law") {
    const Necklace low = necklace_of(make(4, {{1}, {2}, {4}}));
    const Necklace high = necklace_of(make(4, {{1, 2}, {1, 4}, {2, 4}}));
    const Necklace joined = pair_to_necklace(low, high);
    CHECK(joined == nk(5, 2, {{1, 2}, {2, 4}, {4, 5}, {4, 5}, {1, 5}}));
    CHECK(is_grassmann_necklace(joined));
    CHECK(positroid_of(joined).same_as(make(5, {{1, 2}, {1, 4}, {2, 4}, {1, 5}, {2, 5}, {4, 5}})));
}

TEST_CASE("delete/contract on necklaces") {
    const auto [contr, del] = delete_contract_necklaces(nk(5, 2, {{1, 2}, {2, 4}, {4, 5}, {4, 5}, {1, 5}}));
    CHECK(contr == nk(4, 1, {{1}, {2}, {4}, {4}}));
    CHECK(del == nk(4, 2, {{1, 2}, {2, 4}, {1, 4}, {1, 4}}));

    const auto [c2, d2] = delete_contract_necklaces(necklace_of(uniform_matroid(2, 5)));
    CHECK(positroid_of(c2).same_as(uniform_matroid(1, 4)));
    CHECK(positroid_of(d2).same_as(uniform_matroid(2, 4)));

    // removing a loop or coloop is refused
    CHECK_THROWS_AS(delete_contract_necklaces(necklace_of(make(3, {{1, 2}}))), invalid_input);
    CHECK_THROWS_AS(delete_contract_necklaces(necklace_of(make(3, {{1, 3}, {2, 3}}))), invalid_input);
}

TEST_CASE("quotient test on the catalogued pair") {
    const Necklace bad = nk(6, 3, {{1, 2, 3}, {2, 3, 5}, {3, 5, 6}, {4, 5, 6}, {5, 6, 1}, {6, 1, 3}});
    const Necklace good = nk(6, 3, {{1, 2, 3}, {2, 3, 5}, {3, 4, 5}, {4, 5, 6}, {5, 6, 1}, {6, 1, 3}});
    const Necklace high =
        nk(6, 4, {{1, 2, 3, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}, {4, 5, 6, 1}, {5, 6, 1, 2}, {6, 1, 2, 3}});
    REQUIRE(is_grassmann_necklace(bad));
    REQUIRE(is_grassmann_necklace(good));
    REQUIRE(is_grassmann_necklace(high));

    const auto rbad = quotient_test_necklaces(bad, high);
    CHECK_FALSE(rbad.ok);
    CHECK(rbad.failed_condition == 3);

    const auto rgood = quotient_test_necklaces(good, high);
    CHECK(rgood.ok);
    const auto [k1, k2] = delete_contract_necklaces(pair_to_necklace(good, high));
    CHECK(k1 == good);
    CHECK(k2 == high);

    // swapping 1 for 2 in the fourth entry breaks condition 4: the added
    // element must be min_4 of I_1 \ I_4
    const Necklace high_variant =
        nk(6, 4, {{1, 2, 3, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}, {4, 5, 6, 2}, {5, 6, 1, 2}, {6, 1, 2, 3}});
    REQUIRE(is_grassmann_necklace(high_variant));
    const auto rvar = quotient_test_necklaces(good, high_variant);
    CHECK_FALSE(rvar.ok);
    CHECK(rvar.failed_condition == 4);
}

TEST_CASE("quotient test rejects bad input") {
    const Matroid m1 = make(3, {{1}, {3}});
    const Matroid m2 = make(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(quotient_test(m1, m2).ok);  // positroids, but not a positively oriented quotient
    CHECK_THROWS_AS(quotient_test(m1, make(3, {{1, 2, 3}})), invalid_input);  // rank gap 2
    CHECK_THROWS_AS(quotient_test(make(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}), uniform_matroid(3, 4)),
                    invalid_input);  // non-positroid input
}

TEST_CASE("flag positroid recognition, consecutive ranks") {
    CHECK(is_flag_positroid_consecutive(
        std::vector<Matroid>{make(3, {{1}, {3}}), make(3, {{1, 3}}), make(3, {{1, 2, 3}})}));
    CHECK(is_flag_positroid_consecutive(std::vector<Matroid>{make(4, {{1}, {2}, {4}}),
                                                             make(4, {{1, 2}, {1, 4}, {2, 4}}),
                                                             make(4, {{1, 2, 4}}), make(4, {{1, 2, 3, 4}})}));
    CHECK_FALSE(is_flag_positroid_consecutive(
        std::vector<Matroid>{make(3, {{1}, {3}}), make(3, {{1, 2}, {1, 3}, {2, 3}})}));
    CHECK_THROWS_AS(is_flag_positroid_consecutive(
                        std::vector<Matroid>{make(3, {{1}, {3}}), make(3, {{1, 2, 3}})}),
                    invalid_input);
}

TEST_CASE("delete/contract necklaces agree with matroid-level minors", "[exhaustive]") {
    for (int n = 2; n <= 5; ++n) {
        for (int d = 1; d <= n - 1; ++d) {
            for (const Necklace& neck : enumerate_necklaces(n, d)) {
                const Matroid m = positroid_of(neck);
                if (m.is_loop(n) || m.is_coloop(n)) continue;
                const auto [contr, del] = delete_contract_necklaces(neck);
                REQUIRE(contr == necklace_of(m.contracted(mask_bit(n)).relabeled_dense()));
                REQUIRE(del == necklace_of(m.deleted(mask_bit(n)).relabeled_dense()));
            }
        }
    }
}

TEST_CASE("necklace/positroid bijection roundtrip", "[exhaustive]") {
    for (int n = 1; n <= 5; ++n) {
        for (int d = 0; d <= n; ++d) {
            for (const Necklace& neck : enumerate_necklaces(n, d)) {
                const Matroid m = positroid_of(neck);
                REQUIRE(Matroid::is_matroid_bases(n, m.bases()));
                REQUIRE(necklace_of(m) == neck);
                REQUIRE(is_positroid(m));
            }
        }
        // positroid_of ∘ necklace_of is the identity exactly on positroids
        for (int r = 0; r <= n; ++r) {
            for (const Matroid& m : enumerate_matroids(n, r)) {
                const bool roundtrip = positroid_of(necklace_of(m)).bases() == m.bases();
                REQUIRE(roundtrip == is_positroid(m));
            }
        }
    }
}

TEST_CASE("assembled pairs give necklaces when the entry test passes", "[property]") {
    std::mt19937_64 rng(42);
    int tested = 0;
    for (int t = 0; t < 4000 && tested < 400; ++t) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const Necklace low = random_necklace(n, r, rng);
        const Necklace high = random_necklace(n, r + 1, rng);
        bool contained = true;
        for (int i = 0; i < n; ++i) contained = contained && (low.sets[i] & ~high.sets[i]) == 0;
        if (!contained) continue;
        std::vector<int> s;
        for (int i = 1; i <= n; ++i)
            if (gale_leq(low.sets[i - 1] | mask_bit(n + 1), high.sets[i - 1], i, n + 1)) s.push_back(i);
        const bool interval = s.empty() || (s.back() == n && s.front() + static_cast<int>(s.size()) - 1 == n);
        if (!interval) continue;
        ++tested;
        REQUIRE(is_grassmann_necklace(pair_to_necklace(low, high)));
    }
    CHECK(tested > 50);
}

TEST_CASE("construction roundtrip on random quotient pairs", "[property]") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 300; ++t) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const auto [m1, m2] = testgen::random_quotient_pair(n, r, rng);
        REQUIRE(quotient_test(m1, m2).ok);
        const Necklace i1 = necklace_of(m1), i2 = necklace_of(m2);
        const auto [k1, k2] = delete_contract_necklaces(pair_to_necklace(i1, i2));
        REQUIRE(k1 == i1);
        REQUIRE(k2 == i2);
        // Construction #1 basis law
        std::set<Mask> want(m2.bases().begin(), m2.bases().end());
        for (Mask b : m1.bases()) want.insert(b | mask_bit(n + 1));
        const Matroid joined = positroid_of(pair_to_necklace(i1, i2));
        std::set<Mask> got(joined.bases().begin(), joined.bases().end());
        REQUIRE(got == want);
    }
}
