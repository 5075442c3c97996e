#include "flagpos/necklace.hpp"

#include <algorithm>

#include "flagpos/gale.hpp"

namespace flagpos {

namespace {

void validate_shape(const Necklace& nk) {
    if (nk.n < 1 || nk.n > kMaxGround) throw invalid_input("necklace ground size out of range");
    if (nk.d < 0 || nk.d > nk.n) throw invalid_input("necklace rank out of range");
    if (static_cast<int>(nk.sets.size()) != nk.n) throw invalid_input("necklace must have n entries");
    for (Mask s : nk.sets) {
        if ((s & ~full_mask(nk.n)) != 0) throw invalid_input("necklace entry not contained in [n]");
        if (mask_size(s) != nk.d) throw invalid_input("necklace entries of mixed cardinality");
    }
}

// Axiom at position i (1-based, cyclic): if i ∈ I_i then I_{i+1} ⊇ I_i \ i,
// otherwise I_{i+1} = I_i.
bool step_ok(Mask cur, Mask next, int i) {
    if (mask_has(cur, i)) return (cur & ~mask_bit(i) & ~next) == 0;
    return cur == next;
}

}  // namespace

bool is_grassmann_necklace(const Necklace& nk) {
    validate_shape(nk);
    for (int i = 1; i <= nk.n; ++i) {
        Mask cur = nk.sets[i - 1];
        Mask next = nk.sets[i % nk.n];
        if (!step_ok(cur, next, i)) return false;
    }
    return true;
}

Necklace necklace_of(const Matroid& m) {
    if (m.ground() != full_mask(m.n()))
        throw invalid_input("necklace_of expects a matroid on the full ground set [n]; relabel first");
    Necklace nk{m.n(), m.rank(), {}};
    nk.sets.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 1; i <= m.n(); ++i) nk.sets.push_back(gale_min_checked(m.bases(), i, m.n()));
    return nk;
}

bool positroid_membership(const Necklace& nk, Mask b) {
    for (int i = 1; i <= nk.n; ++i)
        if (!gale_leq(nk.sets[i - 1], b, i, nk.n)) return false;
    return true;
}

Matroid positroid_of(const Necklace& nk) {
    if (!is_grassmann_necklace(nk)) throw invalid_input("positroid_of: not a Grassmann necklace");
    std::vector<Mask> bases;
    for (Mask b : combinations(nk.n, nk.d))
        if (positroid_membership(nk, b)) bases.push_back(b);
    if (bases.empty()) throw internal_error("valid necklace produced an empty basis collection");
    return Matroid(nk.n, std::move(bases));
}

bool is_positroid(const Matroid& m) {
    const Matroid dense = (m.ground() == full_mask(m.n())) ? m : m.relabeled_dense();
    Necklace nk;
    try {
        nk = necklace_of(dense);
    } catch (const invalid_input&) {
        return false;  // no unique Gale minimum: not even a matroid
    }
    return positroid_of(nk).bases() == dense.bases();
}

Necklace pair_to_necklace(const Necklace& low, const Necklace& high) {
    if (!is_grassmann_necklace(low) || !is_grassmann_necklace(high))
        throw invalid_input("pair_to_necklace: inputs must be Grassmann necklaces");
    if (low.n != high.n) throw invalid_input("pair_to_necklace: ground sizes differ");
    if (high.d != low.d + 1) throw invalid_input("pair_to_necklace: ranks must differ by one");
    const int n = low.n;
    const Mask top = mask_bit(n + 1);
    Necklace out{n + 1, high.d, {}};
    out.sets.resize(static_cast<std::size_t>(n) + 1);
    out.sets[0] = high.sets[0];
    for (int i = 2; i <= n; ++i) {
        Mask a = low.sets[i - 1] | top;
        Mask b = high.sets[i - 1];
        if (gale_leq(a, b, i, n + 1))
            out.sets[i - 1] = a;
        else if (gale_leq(b, a, i, n + 1))
            out.sets[i - 1] = b;
        else
            throw invalid_input("pair_to_necklace: Gale-incomparable entries at position " + std::to_string(i));
    }
    out.sets[n] = low.sets[0] | top;
    return out;
}

std::pair<Necklace, Necklace> delete_contract_necklaces(const Necklace& j) {
    if (!is_grassmann_necklace(j)) throw invalid_input("delete_contract_necklaces: not a Grassmann necklace");
    const int big = j.n;  // the removed element is big = n+1
    const int n = big - 1;
    if (n < 1) throw invalid_input("delete_contract_necklaces: ground set too small");
    const Mask topbit = mask_bit(big);
    const Mask jtop = j.sets[static_cast<std::size_t>(big) - 1];
    if (!(jtop & topbit)) throw invalid_input("removed element is a loop");
    bool coloop = true;
    for (Mask s : j.sets) coloop = coloop && (s & topbit);
    if (coloop) throw invalid_input("removed element is a coloop");

    // Work directly from the membership predicate: the deletion's bases are
    // the d-subsets of [n] passing the Gale bounds, the contraction's are
    // the (d-1)-subsets whose union with n+1 passes them.  One-element
    // exchange shortcuts exist in the literature but break down on positroids
    // with repeated necklace entries, so the direct Gale minima are used.
    std::vector<Mask> del_bases, contr_bases;
    for (Mask b : combinations(n, j.d))
        if (positroid_membership(j, b)) del_bases.push_back(b);
    for (Mask b : combinations(n, j.d - 1))
        if (positroid_membership(j, b | topbit)) contr_bases.push_back(b);
    if (del_bases.empty() || contr_bases.empty())
        throw internal_error("delete_contract_necklaces: minor lost every basis");

    Necklace contr{n, j.d - 1, {}}, del{n, j.d, {}};
    contr.sets.reserve(static_cast<std::size_t>(n));
    del.sets.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        contr.sets.push_back(gale_min_checked(contr_bases, i, n));
        del.sets.push_back(gale_min_checked(del_bases, i, n));
    }
    return {contr, del};
}

QuotientResult quotient_test_necklaces(const Necklace& low, const Necklace& high) {
    if (!is_grassmann_necklace(low) || !is_grassmann_necklace(high))
        throw invalid_input("quotient_test: inputs must be Grassmann necklaces");
    if (low.n != high.n) throw invalid_input("quotient_test: ground sizes differ");
    if (high.d != low.d + 1) throw invalid_input("quotient_test: rank gap must be one");
    if (low.d < 1) throw invalid_input("quotient_test: the lower rank must be at least 1");
    const int n = low.n;

    // (1) containment at every position
    for (int i = 1; i <= n; ++i)
        if ((low.sets[i - 1] & ~high.sets[i - 1]) != 0) return {false, 1};

    // (2) S = { i : I_i ∪ {n+1} <=_i J_i } must be [d,n] or empty, comparing
    // (r+1)-subsets of [n+1]
    const Mask top = mask_bit(n + 1);
    std::vector<bool> in_s(static_cast<std::size_t>(n) + 1, false);
    int first = 0, count = 0;
    for (int i = 1; i <= n; ++i) {
        if (gale_leq(low.sets[i - 1] | top, high.sets[i - 1], i, n + 1)) {
            in_s[i] = true;
            ++count;
            if (first == 0) first = i;
        }
    }
    if (count != 0 && (first + count - 1 != n)) return {false, 2};
    // contiguity
    if (count != 0)
        for (int i = first; i <= n; ++i)
            if (!in_s[i]) return {false, 2};

    // (3)/(4) are exactly the entrywise equalities of the construction
    // roundtrip: assembling the rank-(r+1) necklace on [n+1] and removing
    // n+1 again must reproduce the inputs.  Condition (3) covers the
    // contraction entries at i ∉ S, condition (4) the deletion entries at
    // i ∈ S; the complementary entries agree by construction.
    const Necklace joined = pair_to_necklace(low, high);
    const auto [contr, del] = delete_contract_necklaces(joined);
    for (int i = 1; i <= n; ++i)
        if (!in_s[i] && contr.sets[i - 1] != low.sets[i - 1]) return {false, 3};
    for (int i = 1; i <= n; ++i)
        if (in_s[i] && del.sets[i - 1] != high.sets[i - 1]) return {false, 4};
    if (contr.sets != low.sets || del.sets != high.sets)
        throw internal_error("quotient roundtrip mismatch outside conditions 3/4");
    return {true, 0};
}

QuotientResult quotient_test(const Matroid& m1, const Matroid& m2) {
    if (m1.n() != m2.n() || m1.ground() != m2.ground())
        throw invalid_input("quotient_test: ground sets differ");
    if (m2.rank() != m1.rank() + 1) throw invalid_input("quotient_test: rank gap must be one");
    if (!is_positroid(m1) || !is_positroid(m2)) throw invalid_input("quotient_test: inputs must be positroids");
    const Matroid a = (m1.ground() == full_mask(m1.n())) ? m1 : m1.relabeled_dense();
    const Matroid b = (m2.ground() == full_mask(m2.n())) ? m2 : m2.relabeled_dense();
    return quotient_test_necklaces(necklace_of(a), necklace_of(b));
}

bool is_flag_positroid_consecutive(std::span<const Matroid> seq) {
    if (seq.empty()) throw invalid_input("empty sequence");
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].rank() != seq[i - 1].rank() + 1)
            throw invalid_input("is_flag_positroid_consecutive: ranks must be consecutive");
    for (const Matroid& m : seq)
        if (!is_positroid(m)) return false;
    for (std::size_t i = 1; i + 1 <= seq.size(); ++i)
        if (!quotient_test(seq[i - 1], seq[i]).ok) return false;
    return true;
}

namespace {

// All transitions I -> I' allowed by the axiom at position i.
void transitions(Mask cur, int i, int n, std::vector<Mask>& out) {
    out.clear();
    if (!mask_has(cur, i)) {
        out.push_back(cur);
        return;
    }
    Mask base = cur & ~mask_bit(i);
    for (int j = 1; j <= n; ++j)
        if (!mask_has(base, j)) out.push_back(base | mask_bit(j));
}

}  // namespace

std::vector<Necklace> enumerate_necklaces(int n, int d) {
    std::vector<Necklace> out;
    std::vector<Mask> seq(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (step_ok(seq[n - 1], seq[0], n)) out.push_back(Necklace{n, d, seq});
            return;
        }
        std::vector<Mask> trans;
        transitions(seq[i - 1], i, n, trans);
        for (Mask nxt : trans) {
            seq[i] = nxt;
            self(self, i + 1);
        }
    };
    for (Mask first : combinations(n, d)) {
        seq[0] = first;
        rec(rec, 1);
    }
    return out;
}

Necklace random_necklace(int n, int d, std::mt19937_64& rng) {
    const std::vector<Mask> firsts = combinations(n, d);
    std::vector<Mask> trans;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Necklace nk{n, d, {}};
        nk.sets.resize(static_cast<std::size_t>(n));
        nk.sets[0] = firsts[rng() % firsts.size()];
        for (int i = 1; i < n; ++i) {
            transitions(nk.sets[i - 1], i, n, trans);
            nk.sets[i] = trans[rng() % trans.size()];
        }
        if (step_ok(nk.sets[n - 1], nk.sets[0], n)) return nk;
    }
    throw internal_error("random_necklace: did not close after many attempts");
}

}  // namespace flagpos
