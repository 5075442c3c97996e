#pragma once

#include <span>
#include <utility>
#include <vector>

#include "flagpos/matroid.hpp"
#include "flagpos/necklace.hpp"
#include "flagpos/permutation.hpp"
#include "flagpos/rational.hpp"

namespace flagpos {

/** Bruhat interval [u, v]; construction validates u <= v. */
struct BruhatInterval {
    Perm u, v;

    BruhatInterval(Perm a, Perm b);
    std::vector<Perm> elements() const { return bruhat_interval(u, v); }
};

/** Permutation vectors (x(1),...,x(n)) over the interval. */
std::vector<QVec> bip_vertices(const Perm& u, const Perm& v);

/** Twisted vectors (n+1-x^{-1}(1),...,n+1-x^{-1}(n)) over the interval. */
std::vector<QVec> twisted_bip_vertices(const Perm& u, const Perm& v);

/** Complete flag of a permutation: z([1]) ⊂ z([2]) ⊂ ... ⊂ z([n]). */
std::vector<Mask> flag_of_perm(const Perm& z);

/** Permutation of a complete flag chain; throws when the chain is not complete. */
Perm perm_of_flag(std::span<const Mask> flag);

/** Complete flag matroid with constituent-d bases { z([d]) : u <= z <= v }. */
FlagMatroid interval_flag_matroid(const Perm& u, const Perm& v);

/**
 * Grassmann necklaces of the interval's constituents, built from the
 * Gale-minimal permutations z^{(j)}: entry i of the rank-j necklace is
 * z^{(i)}([j]).  Each z^{(j)} is reassembled from per-rank Gale minima and
 * validated against a direct search over the interval.
 */
std::vector<Necklace> constituent_necklaces(const Perm& u, const Perm& v);

/** Bruhat-minimal and -maximal permutations among a set of complete flags. */
std::pair<Perm, Perm> envelope_of_perms(std::span<const Perm> perms);

/** Bruhat interval envelope of a complete flag matroid. */
std::pair<Perm, Perm> envelope(const FlagMatroid& fm);

/** Whether the envelope's interval flag matroid reproduces fm exactly. */
bool is_interval_flag_matroid(const FlagMatroid& fm);

/**
 * The (u, v) of the realizing interval of a complete flag positroid:
 * u(i) = Bmin_i \ Bmin_{i-1} and v(i) = Bmax_i \ Bmax_{i-1}, with Bmin/Bmax
 * the Gale-minimal/-maximal bases in the usual order.
 */
std::pair<Perm, Perm> uv_from_flag_positroid(std::span<const Matroid> seq);

}  // namespace flagpos
