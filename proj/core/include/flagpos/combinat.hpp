#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "flagpos/errors.hpp"

namespace flagpos {

/**
 * Subsets of [n] = {1,...,n} as machine-word bit masks: element e occupies
 * bit (e-1).  Every public interface that serializes subsets converts to
 * sorted 1-based element lists; the masks never leave the library.
 */
using Mask = std::uint64_t;

constexpr int kMaxGround = 20;  // enumeration kernels assume small ground sets

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_has(Mask m, int e) { return (m >> (e - 1)) & 1u; }
inline Mask mask_bit(int e) { return Mask{1} << (e - 1); }
inline Mask full_mask(int n) { return (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<int> mask_elements(Mask m);
Mask mask_of(const std::vector<int>& elems, int n);

/** Binomial coefficient with a precomputed table, exact for n <= 64. */
std::uint64_t binom(int n, int k);

/** All k-subsets of [n], ordered lexicographically as sorted element tuples. */
std::vector<Mask> combinations(int n, int k);

/** Rank of a k-subset in the lex order used by combinations(). */
std::size_t lex_rank(int n, int k, Mask m);
Mask lex_unrank(int n, int k, std::size_t idx);

/** Iterate submasks of m (including 0 and m itself). */
template <typename F>
void for_each_submask(Mask m, F&& f) {
    Mask s = m;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

std::string subset_to_string(Mask m);  // "{1,3,4}" style, for diagnostics

}  // namespace flagpos
