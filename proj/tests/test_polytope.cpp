#include <algorithm>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "flagpos/flag_geometry.hpp"
#include "flagpos/polytope.hpp"
#include "support/generators.hpp"

using namespace flagpos;

namespace {

QVec pt(std::initializer_list<long> coords) {
    QVec p;
    for (long c : coords) p.emplace_back(c);
    return p;
}

}  // namespace

TEST_CASE("affine reduction") {
    // a square inside the hyperplane sum = 1 in R^3
    std::vector<QVec> pts{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
    const ReducedPoints rp = affine_reduce(pts);
    CHECK(rp.dim == 2);
    CHECK(affine_reduce({pt({3, 4})}).dim == 0);
}

TEST_CASE("hull of the octahedron") {
    const Polytope p = hypersimplex(2, 4);
    CHECK(p.dim == 3);
    CHECK(p.fvector == std::vector<int>({6, 12, 8}));
    CHECK(p.vertices.size() == 6);
}

TEST_CASE("hull of the permutohedron") {
    const Polytope p = permutohedron(4);
    CHECK(p.dim == 3);
    CHECK(p.fvector == std::vector<int>({24, 36, 14}));
}

TEST_CASE("hull edge cases") {
    CHECK(hull_faces({pt({1, 2, 3})}).dim == 0);
    const Polytope seg = hull_faces({pt({0, 0}), pt({2, 2}), pt({1, 1})});
    CHECK(seg.dim == 1);
    CHECK(seg.vertices.size() == 2);  // the midpoint is not extreme
    CHECK_THROWS_AS(hull_faces({pt({0, 0}), pt({0, 0})}), invalid_input);
}

TEST_CASE("point-in-hull LP") {
    std::vector<QVec> square{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
    QVec mid{make_rat(1, 2), make_rat(1, 2)};
    CHECK(in_convex_hull(mid, square));
    CHECK(in_convex_hull(pt({1, 0}), square));
    CHECK_FALSE(in_convex_hull(pt({2, 0}), square));
    QVec outside{make_rat(1, 2), make_rat(-1, 7)};
    CHECK_FALSE(in_convex_hull(outside, square));
}

TEST_CASE("regular subdivision of the octahedron") {
    const auto pts = hypersimplex_vertices(2, 4);  // lex order 12,13,14,23,24,34
    std::vector<Rat> w{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    const Subdivision sub = regular_subdivision(pts, w);
    REQUIRE(sub.cells.size() == 2);
    // cells: pyramids with apexes e_{12} (index 0) and e_{34} (index 5)
    CHECK(sub.cells[0] == std::vector<int>({0, 1, 2, 3, 4}));
    CHECK(sub.cells[1] == std::vector<int>({1, 2, 3, 4, 5}));
    CHECK(subdivision_fvector(sub) == std::vector<int>({6, 12, 9, 2}));

    const Subdivision trivial = regular_subdivision(pts, std::vector<Rat>(6, Rat(0)));
    CHECK(trivial.cells.size() == 1);
    CHECK(subdivision_fvector(trivial) == std::vector<int>({6, 12, 8, 1}));
}

TEST_CASE("subdivision rejects non-extreme points") {
    std::vector<QVec> pts{pt({0, 0}), pt({2, 0}), pt({1, 0}), pt({0, 2})};
    CHECK_THROWS_AS(regular_subdivision(pts, std::vector<Rat>(4, Rat(0))), invalid_input);
}

TEST_CASE("lower hull uses the weight direction") {
    // a raised square corner stays out of the flat cell, a lowered one is
    // pulled into every cell
    std::vector<QVec> sq{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
    const Subdivision raised = regular_subdivision(sq, {Rat(0), Rat(0), Rat(0), Rat(1)});
    REQUIRE(raised.cells.size() == 2);
    bool has_flat = false;
    for (const auto& cell : raised.cells)
        has_flat = has_flat || std::find(cell.begin(), cell.end(), 3) == cell.end();
    CHECK(has_flat);

    const Subdivision lowered = regular_subdivision(sq, {Rat(0), Rat(0), Rat(0), Rat(-1)});
    REQUIRE(lowered.cells.size() == 2);
    for (const auto& cell : lowered.cells)
        CHECK(std::find(cell.begin(), cell.end(), 3) != cell.end());
}

TEST_CASE("subdivision f-vectors count interior faces once", "[property]") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        const auto pts = hypersimplex_vertices(2, 4);
        std::vector<Rat> w;
        for (int i = 0; i < 6; ++i) w.push_back(testgen::random_rat(rng, 6));
        const Subdivision sub = regular_subdivision(pts, w);
        const auto f = subdivision_fvector(sub);
        REQUIRE(f.size() == 4);
        CHECK(f[0] == 6);
        CHECK(f[3] == static_cast<int>(sub.cells.size()));
        // Euler relation for a 3-ball: V - E + F - C = 1
        CHECK(f[0] - f[1] + f[2] - f[3] == 1);
    }
}
