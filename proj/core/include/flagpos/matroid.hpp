#pragma once

#include <span>
#include <vector>

#include "flagpos/combinat.hpp"

namespace flagpos {

/**
 * Matroid on a labeled ground set, given by its bases.
 *
 * The ground set is a subset of [n]; minors keep the original element labels,
 * so a deletion of {4,5} from a matroid on [5] lives on the labeled set
 * {1,2,3} with n still 5.  relabeled_dense() maps the labels onto an initial
 * segment when a canonical copy is wanted.
 */
class Matroid {
  public:
    enum class Verify { kNone, kExchange };

    Matroid(int n, std::vector<Mask> bases, Verify verify = Verify::kNone);
    Matroid(int n, Mask ground, std::vector<Mask> bases, Verify verify = Verify::kNone);

    /** Basis-exchange axiom over every ordered pair of bases. */
    static bool is_matroid_bases(int n, const std::vector<Mask>& bases);

    int n() const { return n_; }
    Mask ground() const { return ground_; }
    int ground_size() const { return mask_size(ground_); }
    int rank() const { return rank_; }
    const std::vector<Mask>& bases() const { return bases_; }

    bool is_basis(Mask b) const;
    int rank_of(Mask s) const;  // max |B ∩ S| over bases B
    bool is_independent(Mask s) const { return rank_of(s) == mask_size(s); }
    bool is_loop(int e) const;
    bool is_coloop(int e) const;

    Matroid deleted(Mask s) const;
    Matroid contracted(Mask s) const;
    Matroid restricted(Mask s) const;
    Matroid dual() const;
    Matroid direct_sum(const Matroid& other) const;

    /** Order-preserving relabeling of the ground set onto 1..|ground|. */
    Matroid relabeled_dense() const;

    bool same_as(const Matroid& other) const;

  private:
    int n_ = 0;
    Mask ground_ = 0;
    int rank_ = 0;
    std::vector<Mask> bases_;
};

Matroid uniform_matroid(int d, int n);

/** Direct sum of minors along a chain: M|S1 ⊕ M|S2/S1 ⊕ ... ⊕ M/Sl. */
Matroid chain_face_minor(const Matroid& m, const std::vector<Mask>& chain);

/**
 * Matroid-quotient test via the rank inequality
 *   rk_hi(A) - rk_hi(B) >= rk_lo(A) - rk_lo(B)  for all B ⊆ A ⊆ ground.
 */
bool is_quotient(const Matroid& lo, const Matroid& hi);

/** Sequence of matroids of strictly increasing ranks forming nested quotients. */
struct FlagMatroid {
    std::vector<Matroid> constituents;

    int n() const { return constituents.empty() ? 0 : constituents.front().n(); }
    std::vector<int> ranks() const;
    bool complete() const;
};

bool is_flag_matroid(std::span<const Matroid> seq);

/** All chains B_1 ⊂ ... ⊂ B_k with B_i a basis of the i-th constituent. */
std::vector<std::vector<Mask>> flags_of(std::span<const Matroid> seq);

/** Every labeled matroid of the given rank on [n]; exhaustive, n small. */
std::vector<Matroid> enumerate_matroids(int n, int r);

}  // namespace flagpos
