#include <algorithm>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "flagpos/bruhat_interval.hpp"
#include "flagpos/flag_geometry.hpp"
#include "support/generators.hpp"

using namespace flagpos;

namespace {

Mask ms(std::initializer_list<int> elems, int n) { return mask_of(std::vector<int>(elems), n); }

std::set<QVec> as_set(const std::vector<QVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("interval polytope vertex sets") {
    const Perm u({1, 2, 4, 3}), v({4, 2, 1, 3});
    CHECK(bip_vertices(v, v).size() == 1);
    CHECK(bip_vertices(Perm::identity(4), Perm::longest(4)).size() == 24);

    const auto tw = twisted_bip_vertices(u, v);
    std::set<QVec> want;
    for (auto x : {std::vector<long>{4, 3, 1, 2}, {4, 2, 1, 3}, {3, 4, 1, 2}, {3, 2, 1, 4}, {2, 4, 1, 3},
                   {2, 3, 1, 4}}) {
        QVec p;
        for (long c : x) p.emplace_back(c);
        want.insert(p);
    }
    CHECK(as_set(tw) == want);
    // the twisted polytope equals a plain interval polytope after relabeling
    CHECK(as_set(tw) == as_set(bip_vertices(Perm({2, 3, 1, 4}), Perm({4, 3, 1, 2}))));

    QVec rev;
    for (int i = 4; i >= 1; --i) rev.emplace_back(i);
    CHECK(as_set(twisted_bip_vertices(Perm::identity(4), Perm::identity(4))) == std::set<QVec>{rev});
}

TEST_CASE("interval flag matroids") {
    const Perm u({1, 2, 4, 3}), v({4, 2, 1, 3});
    const FlagMatroid fm = interval_flag_matroid(u, v);
    CHECK(fm.constituents[0].bases() == std::vector<Mask>({ms({1}, 4), ms({2}, 4), ms({4}, 4)}));
    CHECK(fm.constituents[1].bases() == std::vector<Mask>({ms({1, 2}, 4), ms({1, 4}, 4), ms({2, 4}, 4)}));
    CHECK(fm.constituents[2].bases() == std::vector<Mask>({ms({1, 2, 4}, 4)}));
    CHECK(fm.constituents[3].bases() == std::vector<Mask>({full_mask(4)}));
    CHECK(fm.complete());

    // single permutation: the free flag of that permutation
    const FlagMatroid single = interval_flag_matroid(v, v);
    for (int d = 1; d <= 4; ++d) CHECK(single.constituents[d - 1].bases().size() == 1);
}

TEST_CASE("constituent necklaces via Gale-minimal permutations") {
    const Perm u({1, 2, 4, 3}), v({4, 2, 1, 3});
    const auto necks = constituent_necklaces(u, v);
    REQUIRE(necks.size() == 4);
    CHECK(necks[0].sets == std::vector<Mask>({ms({1}, 4), ms({2}, 4), ms({4}, 4), ms({4}, 4)}));
    CHECK(necks[1].sets == std::vector<Mask>({ms({1, 2}, 4), ms({2, 4}, 4), ms({1, 4}, 4), ms({1, 4}, 4)}));
    CHECK(necks[2].sets == std::vector<Mask>(4, ms({1, 2, 4}, 4)));
    CHECK(necks[3].sets == std::vector<Mask>(4, full_mask(4)));

    // same answers through the bases route
    const FlagMatroid fm = interval_flag_matroid(u, v);
    for (int d = 1; d <= 4; ++d) CHECK(necks[d - 1] == necklace_of(fm.constituents[d - 1]));

    // identity interval: necklaces of the free flag
    const auto idnecks = constituent_necklaces(Perm::identity(3), Perm::identity(3));
    CHECK(idnecks[0].sets == std::vector<Mask>({ms({1}, 3), ms({1}, 3), ms({1}, 3)}));
}

TEST_CASE("envelopes") {
    const Perm u({1, 2, 4, 3}), v({4, 2, 1, 3});
    const FlagMatroid fm = interval_flag_matroid(u, v);
    auto [eu, ev] = envelope(fm);
    CHECK(eu == u);
    CHECK(ev == v);
    CHECK(is_interval_flag_matroid(fm));

    const FlagMatroid single = interval_flag_matroid(v, v);
    auto [su, sv] = envelope(single);
    CHECK(su == v);
    CHECK(sv == v);

    CHECK_THROWS_AS(envelope(FlagMatroid{{uniform_matroid(2, 4)}}), invalid_input);
}

TEST_CASE("interval recovery from Gale-extremal bases") {
    const Perm u({1, 2, 4, 3}), v({4, 2, 1, 3});
    const FlagMatroid fm = interval_flag_matroid(u, v);
    auto [ru, rv] = uv_from_flag_positroid(fm.constituents);
    CHECK(ru == u);
    CHECK(rv == v);

    FlagMatroid uniform;
    for (int d = 1; d <= 4; ++d) uniform.constituents.push_back(uniform_matroid(d, 4));
    auto [fu, fv] = uv_from_flag_positroid(uniform.constituents);
    CHECK(fu == Perm::identity(4));
    CHECK(fv == Perm::longest(4));

    std::mt19937_64 rng(37);
    for (int t = 0; t < 60; ++t) {
        const int n = 3 + static_cast<int>(rng() % 3);
        auto [a, b] = testgen::random_interval(n, rng);
        auto [ga, gb] = uv_from_flag_positroid(interval_flag_matroid(a, b).constituents);
        REQUIRE(ga == a);
        REQUIRE(gb == b);
    }
}

TEST_CASE("twisted interval polytopes are interval flag matroid polytopes", "[exhaustive]") {
    const auto perms = all_perms(4);
    for (const Perm& u : perms)
        for (const Perm& v : perms) {
            if (!bruhat_leq(u, v)) continue;
            const FlagPolytope fp = flag_polytope(interval_flag_matroid(u, v));
            CHECK(as_set(fp.vertices) == as_set(twisted_bip_vertices(u, v)));
        }
}

TEST_CASE("interval constituents are positroids forming quotient chains", "[exhaustive]") {
    for (int n = 3; n <= 4; ++n) {
        const auto perms = all_perms(n);
        for (const Perm& u : perms)
            for (const Perm& v : perms) {
                if (!bruhat_leq(u, v)) continue;
                const FlagMatroid fm = interval_flag_matroid(u, v);
                for (const Matroid& m : fm.constituents) REQUIRE(is_positroid(m));
                REQUIRE(is_flag_positroid_consecutive(fm.constituents));
            }
    }
}

TEST_CASE("complete flag positroids are exactly the interval flag matroids among flag matroids",
          "[oracle]") {
    // pom_check on a complete flag matroid coincides with the
    // two-dimensional-face condition of its trivial subdivision
    std::mt19937_64 rng(41);
    int seen_true = 0, seen_false = 0;
    for (int t = 0; t < 120; ++t) {
        const int n = 3 + static_cast<int>(rng() % 2);
        // random complete quotient chain
        std::vector<Matroid> seq;
        bool ok = true;
        for (int d = 1; d <= n && ok; ++d) {
            for (int tries = 0;; ++tries) {
                if (tries > 300) {
                    ok = false;
                    break;
                }
                Matroid cand = testgen::random_matroid(n, d, rng);
                if (d == 1 || is_quotient(seq.back(), cand)) {
                    seq.push_back(std::move(cand));
                    break;
                }
            }
        }
        if (!ok) continue;
        const bool pom = pom_check(seq);
        FlagTropVec mu;
        for (const Matroid& m : seq) mu.mus.push_back(TropVec::indicator(m));
        const MuSubdivision trivial = subdivision_from_mu(mu);
        const bool faces = twod_faces_flag_positroid(trivial).ok;
        REQUIRE(pom == faces);
        (pom ? seen_true : seen_false)++;
    }
    CHECK(seen_true > 0);
    CHECK(seen_false >= 0);
}
