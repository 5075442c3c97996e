#pragma once

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "flagpos/matroid.hpp"

namespace flagpos {

/**
 * Grassmann necklace of type (d, n): a cyclic sequence (I_1,...,I_n) of
 * d-subsets with I_{i+1} = (I_i \ i) ∪ j whenever i ∈ I_i and I_{i+1} = I_i
 * otherwise (indices mod n).  Necklaces are in bijection with positroids;
 * necklace_of / positroid_of realize the two directions.
 */
struct Necklace {
    int n = 0;
    int d = 0;
    std::vector<Mask> sets;

    bool operator==(const Necklace&) const = default;
};

bool is_grassmann_necklace(const Necklace& nk);

/** The sequence of i-Gale-minimal bases.  Throws when a minimum is not unique. */
Necklace necklace_of(const Matroid& m);

/** Membership predicate: B is a basis iff B >=_i I_i for every i. */
bool positroid_membership(const Necklace& nk, Mask b);

/** The unique positroid with the given necklace (materialized bases). */
Matroid positroid_of(const Necklace& nk);

bool is_positroid(const Matroid& m);

/**
 * Necklace of the rank-(r+1) positroid on [n+1] assembled from a rank-r and
 * a rank-(r+1) necklace on [n]:
 *   J_1 = I^(2)_1,  J_i = min_i { I^(1)_i ∪ {n+1}, I^(2)_i },  J_{n+1} = I^(1)_1 ∪ {n+1}.
 * Throws when some position's pair is Gale-incomparable.
 */
Necklace pair_to_necklace(const Necklace& low, const Necklace& high);

/**
 * Necklaces of M/(n+1) and M\(n+1) read directly off the necklace of a
 * positroid M on [n+1] in which n+1 is neither a loop nor a coloop.
 */
std::pair<Necklace, Necklace> delete_contract_necklaces(const Necklace& j);

struct QuotientResult {
    bool ok = false;
    int failed_condition = 0;  // 1..4 when !ok
};

/**
 * Four-condition combinatorial test deciding whether the positroids of two
 * adjacent-rank necklaces form a positively oriented quotient.  Conditions
 * are checked in order 1..4 and the first failure is reported.
 */
QuotientResult quotient_test_necklaces(const Necklace& low, const Necklace& high);

/** Same test starting from matroids; both inputs must be positroids. */
QuotientResult quotient_test(const Matroid& m1, const Matroid& m2);

/** Consecutive-rank flag positroid recognition: every adjacent pair passes. */
bool is_flag_positroid_consecutive(std::span<const Matroid> seq);

std::vector<Necklace> enumerate_necklaces(int n, int d);

Necklace random_necklace(int n, int d, std::mt19937_64& rng);

}  // namespace flagpos
