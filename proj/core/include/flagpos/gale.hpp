#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "flagpos/combinat.hpp"

namespace flagpos {

/**
 * Shifted linear orders and Gale orders on equal-size subsets.
 *
 * The shifted order <_i on [n] is  i <_i i+1 <_i ... <_i n <_i 1 <_i ... <_i i-1.
 * For subsets A = {a_1 <_i ... <_i a_d} and B = {b_1 <_i ... <_i b_d},
 * A <=_i B holds iff a_l <=_i b_l for every l.
 */

/** 0-based position of element e in the shifted order with the given pivot. */
inline int shifted_pos(int e, int pivot, int n) {
    int p = e - pivot;
    return p < 0 ? p + n : p;
}

std::strong_ordering shifted_cmp(int a, int b, int pivot, int n);

/** The <_i-least / greatest element of a nonempty subset. */
int min_element_shifted(Mask m, int pivot, int n);
int max_element_shifted(Mask m, int pivot, int n);

bool gale_leq(Mask a, Mask b, int pivot, int n);

/** Strict comparability test; Gale order is only partial. */
bool gale_comparable(Mask a, Mask b, int pivot, int n);

/**
 * The unique <=_i-minimum of an equicardinal collection, or nullopt when the
 * collection has no unique minimum.  Callers treat nullopt as a non-matroid
 * signal: every matroid basis collection has a unique Gale minimum.
 */
std::optional<Mask> gale_min_of(const std::vector<Mask>& collection, int pivot, int n);
std::optional<Mask> gale_max_of(const std::vector<Mask>& collection, int pivot, int n);

Mask gale_min_checked(const std::vector<Mask>& collection, int pivot, int n);
Mask gale_max_checked(const std::vector<Mask>& collection, int pivot, int n);

}  // namespace flagpos
