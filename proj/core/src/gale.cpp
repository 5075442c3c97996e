#include "flagpos/gale.hpp"

#include <algorithm>

namespace flagpos {

namespace {

inline Mask rotate_to_pivot(Mask m, int pivot, int n) {
    if (pivot == 1) return m;
    int s = pivot - 1;
    return ((m >> s) | (m << (n - s))) & full_mask(n);
}

// 0-based sorted positions of the rotated mask
inline void rotated_positions(Mask m, int pivot, int n, std::vector<int>& out) {
    out.clear();
    Mask r = rotate_to_pivot(m, pivot, n);
    while (r) {
        out.push_back(std::countr_zero(r));
        r &= r - 1;
    }
}

}  // namespace

std::strong_ordering shifted_cmp(int a, int b, int pivot, int n) {
    if (a < 1 || a > n || b < 1 || b > n) throw invalid_input("shifted_cmp: element out of range");
    return shifted_pos(a, pivot, n) <=> shifted_pos(b, pivot, n);
}

int min_element_shifted(Mask m, int pivot, int n) {
    if (m == 0) throw invalid_input("min_element_shifted: empty set");
    Mask r = rotate_to_pivot(m, pivot, n);
    int pos = std::countr_zero(r);
    int e = pos + pivot;
    return e > n ? e - n : e;
}

int max_element_shifted(Mask m, int pivot, int n) {
    if (m == 0) throw invalid_input("max_element_shifted: empty set");
    Mask r = rotate_to_pivot(m, pivot, n);
    int pos = 63 - std::countl_zero(r);
    int e = pos + pivot;
    return e > n ? e - n : e;
}

bool gale_leq(Mask a, Mask b, int pivot, int n) {
    if (mask_size(a) != mask_size(b)) throw invalid_input("gale_leq: unequal cardinalities");
    // a <=_i b iff every shifted-order prefix holds at least as many elements
    // of a as of b.
    Mask ra = rotate_to_pivot(a, pivot, n);
    Mask rb = rotate_to_pivot(b, pivot, n);
    int ca = 0, cb = 0;
    for (int t = 0; t < n; ++t) {
        ca += static_cast<int>((ra >> t) & 1u);
        cb += static_cast<int>((rb >> t) & 1u);
        if (ca < cb) return false;
    }
    return true;
}

bool gale_comparable(Mask a, Mask b, int pivot, int n) {
    return gale_leq(a, b, pivot, n) || gale_leq(b, a, pivot, n);
}

namespace {

std::optional<Mask> gale_extreme(const std::vector<Mask>& collection, int pivot, int n, bool want_min) {
    if (collection.empty()) throw invalid_input("gale extreme of empty collection");
    const int d = mask_size(collection.front());
    std::vector<int> cand(d, want_min ? n : -1);
    std::vector<int> pos;
    for (Mask m : collection) {
        if (mask_size(m) != d) throw invalid_input("gale extreme: mixed cardinalities");
        rotated_positions(m, pivot, n, pos);
        for (int l = 0; l < d; ++l) {
            if (want_min)
                cand[l] = std::min(cand[l], pos[l]);
            else
                cand[l] = std::max(cand[l], pos[l]);
        }
    }
    // The positionwise extreme is itself a subset; a unique Gale extreme
    // exists exactly when that subset is a member of the collection.
    Mask rc = 0;
    for (int p : cand) rc |= Mask{1} << p;
    int s = pivot - 1;
    Mask c = (s == 0) ? rc : (((rc << s) | (rc >> (n - s))) & full_mask(n));
    for (Mask m : collection)
        if (m == c) return c;
    return std::nullopt;
}

}  // namespace

std::optional<Mask> gale_min_of(const std::vector<Mask>& collection, int pivot, int n) {
    return gale_extreme(collection, pivot, n, true);
}

std::optional<Mask> gale_max_of(const std::vector<Mask>& collection, int pivot, int n) {
    return gale_extreme(collection, pivot, n, false);
}

Mask gale_min_checked(const std::vector<Mask>& collection, int pivot, int n) {
    auto m = gale_min_of(collection, pivot, n);
    if (!m) throw invalid_input("collection has no unique Gale minimum (not a matroid basis collection)");
    return *m;
}

Mask gale_max_checked(const std::vector<Mask>& collection, int pivot, int n) {
    auto m = gale_max_of(collection, pivot, n);
    if (!m) throw invalid_input("collection has no unique Gale maximum (not a matroid basis collection)");
    return *m;
}

}  // namespace flagpos
