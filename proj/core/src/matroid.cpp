#include "flagpos/matroid.hpp"

#include <algorithm>

namespace flagpos {

namespace {

void sort_unique(std::vector<Mask>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Matroid::Matroid(int n, std::vector<Mask> bases, Verify verify)
    : Matroid(n, full_mask(n), std::move(bases), verify) {}

Matroid::Matroid(int n, Mask ground, std::vector<Mask> bases, Verify verify)
    : n_(n), ground_(ground), bases_(std::move(bases)) {
    if (n < 0 || n > kMaxGround) throw invalid_input("matroid ground size out of range");
    if ((ground_ & ~full_mask(n)) != 0) throw invalid_input("ground set not contained in [n]");
    if (ground_ == 0) throw invalid_input("matroid on empty ground set");
    if (bases_.empty()) throw invalid_input("matroid with empty basis collection");
    sort_unique(bases_);
    rank_ = mask_size(bases_.front());
    for (Mask b : bases_) {
        if ((b & ~ground_) != 0) throw invalid_input("basis not contained in ground set");
        if (mask_size(b) != rank_) throw invalid_input("bases of mixed cardinality");
    }
    if (verify == Verify::kExchange && !is_matroid_bases(n_, bases_))
        throw invalid_input("basis collection violates the exchange axiom");
}

bool Matroid::is_matroid_bases(int n, const std::vector<Mask>& bases) {
    if (n < 0 || n > kMaxGround) throw invalid_input("ground size out of range");
    if (bases.empty()) throw invalid_input("empty basis collection");
    const int r = mask_size(bases.front());
    for (Mask b : bases)
        if (mask_size(b) != r) throw invalid_input("bases of mixed cardinality");
    std::vector<Mask> sorted = bases;
    sort_unique(sorted);
    auto member = [&](Mask m) { return std::binary_search(sorted.begin(), sorted.end(), m); };
    for (Mask a : sorted) {
        for (Mask b : sorted) {
            Mask out = a & ~b;
            while (out) {
                Mask abit = out & (~out + 1);
                out &= out - 1;
                Mask in = b & ~a;
                bool found = false;
                while (in) {
                    Mask bbit = in & (~in + 1);
                    in &= in - 1;
                    if (member((a & ~abit) | bbit)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

bool Matroid::is_basis(Mask b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
}

int Matroid::rank_of(Mask s) const {
    int best = 0;
    for (Mask b : bases_) best = std::max(best, mask_size(b & s));
    return best;
}

bool Matroid::is_loop(int e) const {
    for (Mask b : bases_)
        if (mask_has(b, e)) return false;
    return true;
}

bool Matroid::is_coloop(int e) const {
    for (Mask b : bases_)
        if (!mask_has(b, e)) return false;
    return true;
}

Matroid Matroid::deleted(Mask s) const {
    Mask keep = ground_ & ~s;
    if (keep == 0) throw invalid_input("deleting every element");
    const int r = rank_of(keep);
    std::vector<Mask> out;
    for (Mask b : bases_) {
        Mask c = b & keep;
        if (mask_size(c) == r) out.push_back(c);
    }
    sort_unique(out);
    return Matroid(n_, keep, std::move(out));
}

Matroid Matroid::contracted(Mask s) const {
    s &= ground_;
    Mask keep = ground_ & ~s;
    if (keep == 0) throw invalid_input("contracting every element");
    // greedy maximal independent subset of s
    Mask t = 0;
    for (int e : mask_elements(s)) {
        if (rank_of(t | mask_bit(e)) == mask_size(t) + 1) t |= mask_bit(e);
    }
    std::vector<Mask> out;
    for (Mask b : bases_) {
        if ((b & t) == t && (b & s & ~t) == 0) out.push_back(b & ~t);
    }
    sort_unique(out);
    return Matroid(n_, keep, std::move(out));
}

Matroid Matroid::restricted(Mask s) const { return deleted(ground_ & ~s); }

Matroid Matroid::dual() const {
    std::vector<Mask> out;
    out.reserve(bases_.size());
    for (Mask b : bases_) out.push_back(ground_ & ~b);
    return Matroid(n_, ground_, std::move(out));
}

Matroid Matroid::direct_sum(const Matroid& other) const {
    if ((ground_ & other.ground_) != 0) throw invalid_input("direct sum of overlapping ground sets");
    std::vector<Mask> out;
    out.reserve(bases_.size() * other.bases_.size());
    for (Mask a : bases_)
        for (Mask b : other.bases_) out.push_back(a | b);
    return Matroid(std::max(n_, other.n_), ground_ | other.ground_, std::move(out));
}

Matroid Matroid::relabeled_dense() const {
    const std::vector<int> labels = mask_elements(ground_);
    const int m = static_cast<int>(labels.size());
    std::vector<int> to_dense(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = 0; i < m; ++i) to_dense[labels[i]] = i + 1;
    std::vector<Mask> out;
    out.reserve(bases_.size());
    for (Mask b : bases_) {
        Mask nb = 0;
        for (int e : mask_elements(b)) nb |= mask_bit(to_dense[e]);
        out.push_back(nb);
    }
    return Matroid(m, std::move(out));
}

bool Matroid::same_as(const Matroid& other) const {
    return ground_ == other.ground_ && bases_ == other.bases_;
}

Matroid uniform_matroid(int d, int n) {
    if (d < 0 || d > n) throw invalid_input("uniform matroid needs 0 <= d <= n");
    return Matroid(n, combinations(n, d));
}

Matroid chain_face_minor(const Matroid& m, const std::vector<Mask>& chain) {
    if (chain.empty()) return m;
    const Mask ground = m.ground();
    Mask prev = 0;
    for (Mask s : chain) {
        if (s == 0 || s == ground || (s & ~ground) != 0) throw invalid_input("chain entries must be nonempty proper subsets of the ground set");
        if ((prev & ~s) != 0 || prev == s) throw invalid_input("chain is not strictly nested");
        prev = s;
    }
    Matroid acc = m.restricted(chain.front());
    for (std::size_t i = 1; i < chain.size(); ++i)
        acc = acc.direct_sum(m.restricted(chain[i]).contracted(chain[i - 1]));
    acc = acc.direct_sum(m.contracted(chain.back()));
    return acc;
}

bool is_quotient(const Matroid& lo, const Matroid& hi) {
    if (lo.n() != hi.n() || lo.ground() != hi.ground()) throw invalid_input("is_quotient: ground sets differ");
    if (lo.rank() > hi.rank()) throw invalid_input("is_quotient: rank(lo) exceeds rank(hi)");
    const Matroid a = lo.relabeled_dense();
    const Matroid b = hi.relabeled_dense();
    const int m = a.ground_size();
    const std::size_t size = std::size_t{1} << m;
    std::vector<int> rlo(size), rhi(size);
    for (Mask s = 0; s < size; ++s) {
        rlo[s] = a.rank_of(s);
        rhi[s] = b.rank_of(s);
    }
    for (Mask s = 0; s < size; ++s) {
        const int dhi = rhi[s], dlo = rlo[s];
        bool ok = true;
        for_each_submask(s, [&](Mask t) {
            if (dhi - rhi[t] < dlo - rlo[t]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<int> FlagMatroid::ranks() const {
    std::vector<int> r;
    r.reserve(constituents.size());
    for (const auto& m : constituents) r.push_back(m.rank());
    return r;
}

bool FlagMatroid::complete() const {
    if (constituents.empty()) return false;
    const auto r = ranks();
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != static_cast<int>(i) + 1) return false;
    return r.back() == n();
}

bool is_flag_matroid(std::span<const Matroid> seq) {
    if (seq.empty()) throw invalid_input("empty matroid sequence");
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i].rank() <= seq[i - 1].rank()) throw invalid_input("ranks must strictly increase");
        if (!is_quotient(seq[i - 1], seq[i])) return false;
    }
    return true;
}

std::vector<std::vector<Mask>> flags_of(std::span<const Matroid> seq) {
    if (!is_flag_matroid(seq)) throw invalid_input("flags_of: not a flag matroid");
    std::vector<std::vector<Mask>> out;
    std::vector<Mask> cur(seq.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == seq.size()) {
            out.push_back(cur);
            return;
        }
        for (Mask b : seq[i].bases()) {
            if (i > 0 && (cur[i - 1] & ~b) != 0) continue;
            cur[i] = b;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Matroid> enumerate_matroids(int n, int r) {
    const std::vector<Mask> all = combinations(n, r);
    const std::size_t k = all.size();
    if (k > 24) throw invalid_input("enumerate_matroids: ground set too large");
    std::vector<Matroid> out;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
        std::vector<Mask> bases;
        for (std::size_t i = 0; i < k; ++i)
            if ((pick >> i) & 1u) bases.push_back(all[i]);
        if (Matroid::is_matroid_bases(n, bases)) out.emplace_back(n, std::move(bases));
    }
    return out;
}

}  // namespace flagpos
